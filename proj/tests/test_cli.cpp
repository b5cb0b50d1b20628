// End-to-end checks against the built binary (path in WHEELSUB_BIN, set by
// ctest). Each run shells out with redirected streams and asserts the spec'd
// stdout token and exit code.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "wheelsub/families.hpp"
#include "wheelsub/graph_io.hpp"
#include "wheelsub/reductions.hpp"

using namespace wheelsub;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    const char* bin = std::getenv("WHEELSUB_BIN");
    REQUIRE(bin != nullptr);  // ctest exports it; set it by hand otherwise
    const std::string base = "/tmp/wheelsub_cli_test_" + std::to_string(getpid());
    {
        std::ofstream in(base + ".in", std::ios::binary);
        in << stdin_data;
    }
    const std::string cmd = std::string(bin) + " " + args + " < " + base + ".in > " + base +
                            ".out 2> " + base + ".err";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(base + ".out");
    r.err = slurp(base + ".err");
    return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("decide reports the verdict token and exit code") {
    Graph w7 = make_family({Family::wheel, 7});
    RunResult yes = run_cli("decide -", serialize_graph6(w7) + "\n");
    CHECK(yes.exit_code == 0);
    CHECK(first_line(yes.out) == "CONTAINS_W7");

    RunResult no = run_cli("decide -", serialize_graph6(petersen_graph()) + "\n");
    CHECK(no.exit_code == 1);
    CHECK(first_line(no.out) == "NO_W7");
}

TEST_CASE("decide accepts edge lists and files") {
    Graph w7 = make_family({Family::wheel, 7});
    RunResult viaStdin = run_cli("decide -", serialize_edge_list(w7));
    CHECK(viaStdin.exit_code == 0);
    CHECK(first_line(viaStdin.out) == "CONTAINS_W7");

    const std::string path = "/tmp/wheelsub_cli_test_w7.g6";
    {
        std::ofstream f(path);
        f << serialize_graph6(w7) << "\n";
    }
    RunResult viaFile = run_cli("decide " + path + " --format graph6");
    CHECK(viaFile.exit_code == 0);
    CHECK(first_line(viaFile.out) == "CONTAINS_W7");
}

TEST_CASE("decide --trace keeps stdout machine-parseable") {
    Graph k9 = make_family({Family::complete, 9});
    RunResult r = run_cli("decide - --trace", serialize_graph6(k9) + "\n");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "CONTAINS_W7");
    CHECK(r.err.find("step") != std::string::npos);
}

TEST_CASE("oracle anchors the hub") {
    Graph w7 = make_family({Family::wheel, 7});
    const std::string g6 = serialize_graph6(w7) + "\n";

    RunResult rim = run_cli("oracle - --k 7 --centre 1", g6);
    CHECK(rim.exit_code == 1);
    CHECK(first_line(rim.out) == "NO");

    RunResult hub = run_cli("oracle - --k 7 --centre 0 --witness", g6);
    CHECK(hub.exit_code == 0);
    CHECK(first_line(hub.out) == "YES");
    CHECK(hub.out.find("branch") != std::string::npos);
    CHECK(hub.out.find("path 0-1:") != std::string::npos);

    RunResult w4 = run_cli("oracle - --k 4", serialize_graph6(petersen_graph()) + "\n");
    CHECK(w4.exit_code == 0);  // Petersen holds a W4 subdivision, just no W7
    CHECK(first_line(w4.out) == "YES");
}

TEST_CASE("cutsets prints the finding or NONE") {
    std::vector<Edge> es;
    for (int base : {0, 5})  // two K5 blocks
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) es.push_back(Edge(base + i, base + j));
    for (int i = 0; i < 4; ++i) es.push_back(Edge(i, i + 5));  // a 4-edge matching between them
    Graph host(10, es);

    RunResult found = run_cli("cutsets - --kind int1111", serialize_graph6(host) + "\n");
    CHECK(found.exit_code == 0);
    CHECK(first_line(found.out) == "int1111 e=0-5,1-6,2-7,3-8 sides=5/5");

    RunResult none = run_cli("cutsets - --kind int1111", serialize_graph6(petersen_graph()) + "\n");
    CHECK(none.exit_code == 1);
    CHECK(first_line(none.out) == "NONE");
}

TEST_CASE("reduce prints the finding and the rewritten graph") {
    Graph k35 = make_family({Family::complete_bipartite, 3, 5});
    RunResult r = run_cli("reduce -", serialize_graph6(k35) + "\n");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out).substr(0, 4) == "r1a ");

    std::istringstream lines(r.out);
    std::string finding, g6;
    REQUIRE(std::getline(lines, finding));
    REQUIRE(std::getline(lines, g6));
    auto f = find_reduction(k35);
    REQUIRE(f.has_value());
    CHECK(g6 == serialize_graph6(apply_reduction(k35, *f, 7)));

    RunResult none = run_cli("reduce -", serialize_graph6(petersen_graph()) + "\n");
    CHECK(none.exit_code == 1);
    CHECK(first_line(none.out) == "NONE");
}

TEST_CASE("difftest runs a suite and reports PASS") {
    RunResult r = run_cli("difftest --suite differential --count 5 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "suite=differential instances=5 failures=0");
    CHECK(r.out.find("\nPASS\n") != std::string::npos);
}

TEST_CASE("usage and parse problems exit 2") {
    CHECK(run_cli("decide /does/not/exist").exit_code == 2);
    CHECK(run_cli("decide -", "not a graph\n").exit_code == 2);
    CHECK(run_cli("cutsets - --kind bogus", "D~{\n").exit_code == 2);
    CHECK(run_cli("oracle - --centre 99", "D~{\n").exit_code == 2);
    CHECK(run_cli("difftest --suite nope").exit_code == 2);
    CHECK(run_cli("difftest --suite differential --count 1 --ceiling 25").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("decide - --no-such-flag", "D~{\n").exit_code == 2);
}
