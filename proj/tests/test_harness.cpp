#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "wheelsub/connectivity.hpp"
#include "wheelsub/families.hpp"
#include "wheelsub/graph_io.hpp"
#include "wheelsub/subdivision.hpp"
#include "wheelsub/suites.hpp"

using namespace wheelsub;

TEST_CASE("family builders have the expected shapes") {
    Graph w = make_family({Family::wheel, 7});
    REQUIRE(w.vertex_count() == 8);
    CHECK(w.edge_count() == 14);
    std::vector<int> degs;
    for (int v = 0; v < 8; ++v) degs.push_back(w.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{3, 3, 3, 3, 3, 3, 3, 7});

    Graph k8 = make_family({Family::complete, 8});
    CHECK(k8.edge_count() == 28);
    Graph k35 = make_family({Family::complete_bipartite, 3, 5});
    CHECK(k35.edge_count() == 15);
    CHECK(make_family({Family::cycle, 9}).edge_count() == 9);
    CHECK(make_family({Family::path, 9}).edge_count() == 8);
    CHECK(make_family({Family::petersen}).edge_count() == 15);
    Graph grid = make_family({Family::grid, 3, 4});
    CHECK(grid.vertex_count() == 12);
    CHECK(grid.edge_count() == 17);
}

TEST_CASE("random families are reproducible by seed") {
    FamilySpec gnp{Family::random_gnp, 14, 0, 0.4, 99};
    Graph a = make_family(gnp);
    Graph b = make_family(gnp);
    CHECK(serialize_graph6(a) == serialize_graph6(b));
    gnp.seed = 100;
    CHECK(serialize_graph6(a) != serialize_graph6(make_family(gnp)));

    FamilySpec reg{Family::random_regular, 12, 7, 0.0, 5};
    Graph r = make_family(reg);
    REQUIRE(r.vertex_count() == 12);
    for (int v = 0; v < 12; ++v) CHECK(r.degree(v) == 7);
    CHECK(serialize_graph6(r) == serialize_graph6(make_family(reg)));
}

TEST_CASE("constructed instances fire their requested reduction kind") {
    std::mt19937_64 rng(2024);
    for (ReductionKind kind : all_reduction_kinds) {
        for (int rep = 0; rep < 4; ++rep) {
            Graph g = reduction_instance(kind, rng);
            INFO(to_string(kind) << " rep " << rep << " g6 " << serialize_graph6(g));
            REQUIRE(is_3_connected(g));
            auto f = find_reduction_of_kind(g, kind);
            REQUIRE(f.has_value());
            CHECK(f->kind == kind);
            CHECK(verify_reduction(g, *f));
        }
    }
}

TEST_CASE("junction hosts are 3-connected and modest") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 12; ++rep) {
        Graph g = junction_host(rng);
        INFO("rep " << rep << " g6 " << serialize_graph6(g));
        REQUIRE(is_3_connected(g));
        CHECK(g.vertex_count() >= 10);
        CHECK(g.vertex_count() <= 20);
    }
}

TEST_CASE("suite tokens round-trip") {
    for (Suite s : all_suites) {
        auto parsed = parse_suite(to_string(s));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == s);
    }
    CHECK_FALSE(parse_suite("everything").has_value());
    CHECK_FALSE(parse_suite("").has_value());
}

TEST_CASE("every suite passes a short run and is deterministic") {
    SuiteConfig cfg;
    cfg.count = 6;
    cfg.seed = 42;
    for (Suite s : all_suites) {
        SuiteReport rep = run_suite(s, cfg);
        INFO(rep.text());
        CHECK(rep.suite == s);
        CHECK(rep.instances >= cfg.count);
        CHECK(rep.failures == 0);
        CHECK(rep.pass());
        CHECK(rep.reproducers.empty());
        CHECK(rep.text() == run_suite(s, cfg).text());
    }
}

TEST_CASE("suite reports carry one parseable line per comparison") {
    SuiteConfig cfg;
    cfg.count = 9;
    cfg.seed = 5;
    SuiteReport rep = run_suite(Suite::differential, cfg);
    REQUIRE(rep.lines.size() == static_cast<size_t>(rep.instances));
    for (const std::string& line : rep.lines) {
        std::istringstream in(line);
        uint64_t seed = 0;
        int n = 0;
        std::string left, right;
        REQUIRE(static_cast<bool>(in >> seed >> n >> left >> right));
        CHECK(n >= 5);
        CHECK(n <= 20);
        CHECK((left == "CONTAINS_W7" || left == "NO_W7"));
        CHECK(left == right);  // passing run: the verdict columns agree
        std::string extra;
        CHECK_FALSE(static_cast<bool>(in >> extra));  // graph6 column only on failure
    }
    std::string text = rep.text();
    CHECK(text.find("suite=differential") == 0);
    CHECK(text.rfind("PASS\n") == text.size() - 5);
}

TEST_CASE("the oracle ceiling is capped") {
    SuiteConfig cfg;
    cfg.count = 1;
    cfg.oracle_ceiling = 21;
    CHECK_THROWS_AS(run_suite(Suite::differential, cfg), std::invalid_argument);
}

TEST_CASE("split-equivalence runs compare fired splits against the oracle") {
    SuiteConfig cfg;
    cfg.count = 10;
    cfg.seed = 11;
    SuiteReport rep = run_suite(Suite::split_equivalence, cfg);
    INFO(rep.text());
    CHECK(rep.pass());
    // Most junction hosts admit at least one non-refused split.
    CHECK(rep.instances - rep.skipped >= 5);
}
