// Command-line front end: decide / oracle / cutsets / reduce / difftest over
// graph6 or edge-list input. stdout carries the machine-readable answer (first
// line is the verdict token); diagnostics and traces go to stderr. Exit codes:
// 0 contains/pass, 1 not-contains/fail, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wheelsub/cutsets.hpp"
#include "wheelsub/decomposition.hpp"
#include "wheelsub/graph_io.hpp"
#include "wheelsub/reductions.hpp"
#include "wheelsub/solver.hpp"
#include "wheelsub/subdivision.hpp"
#include "wheelsub/suites.hpp"

namespace {

using namespace wheelsub;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// graph6 bytes sit in 63..126, so a first line of digits and blanks can only
// be an edge-list header.
GraphFormat detect_format(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && (text[i] == '\n' || text[i] == '\r')) ++i;
    for (; i < text.size() && text[i] != '\n'; ++i) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return (c >= '0' && c <= '9') ? GraphFormat::edge_list : GraphFormat::graph6;
    }
    return GraphFormat::graph6;  // empty input: let the parser complain
}

Graph load_graph(const std::string& path, const std::string& fmt) {
    std::string text = read_input(path);
    GraphFormat f = fmt == "graph6"      ? GraphFormat::graph6
                    : fmt == "edge-list" ? GraphFormat::edge_list
                                         : detect_format(text);
    return parse_graph(text, f);
}

void print_witness(const SubdivisionWitness& w) {
    std::cout << "branch";
    for (size_t i = 0; i < w.branch_map.size(); ++i)
        std::cout << ' ' << i << "->" << w.branch_map[i];
    std::cout << '\n';
    for (size_t i = 0; i < w.paths.size(); ++i) {
        std::cout << "path " << w.pattern_edges[i].a << '-' << w.pattern_edges[i].b << ':';
        for (int v : w.paths[i]) std::cout << ' ' << v;
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide W7-subdivision containment and inspect the machinery"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string fmt = "auto";
    auto add_graph_args = [&](CLI::App* cmd) {
        cmd->add_option("graph", input, "input file or - for stdin")->capture_default_str();
        cmd->add_option("--format", fmt, "auto|graph6|edge-list")
            ->check(CLI::IsMember({"auto", "graph6", "edge-list"}))
            ->capture_default_str();
    };

    bool trace = false, witness = false;
    CLI::App* decide = app.add_subcommand("decide", "CONTAINS_W7 or NO_W7 via decomposition");
    add_graph_args(decide);
    decide->add_flag("--trace", trace, "log decomposition steps to stderr");
    decide->add_flag("--witness", witness, "print a witness when one is available");

    int k = 7, centre = -1;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive W_k-subdivision search");
    add_graph_args(oracle);
    oracle->add_option("--k", k, "spoke count")->capture_default_str()->check(CLI::Range(3, 32));
    oracle->add_option("--centre", centre, "require this vertex as the hub");
    oracle->add_flag("--witness", witness, "print the embedding");

    std::string kind_name;
    CLI::App* cutsets = app.add_subcommand("cutsets", "search for one cutset kind");
    add_graph_args(cutsets);
    cutsets->add_option("--kind", kind_name, "int3edge|int4edge|int1111|ev1|ev1a|...|ev4a")
        ->required();

    CLI::App* reduce = app.add_subcommand("reduce", "apply the first applicable reduction");
    add_graph_args(reduce);

    std::string suite_name;
    int count = 100, ceiling = 20;
    uint64_t seed = 1;
    CLI::App* difftest = app.add_subcommand("difftest", "run a batch verification suite");
    difftest->add_option("--suite", suite_name,
                         "differential|reduction_preservation|split_equivalence|cutset_soundness")
        ->required();
    difftest->add_option("--count", count, "instances")->capture_default_str();
    difftest->add_option("--seed", seed, "master seed")->capture_default_str();
    difftest->add_option("--ceiling", ceiling, "oracle size ceiling (max 20)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (decide->parsed()) {
            Graph g = load_graph(input, fmt);
            DecideOptions opts;
            opts.trace = trace;
            opts.want_witness = witness;
            Decision d = decide_w7(g, opts);
            if (d.trace)
                for (const TraceEvent& e : *d.trace)
                    std::cerr << std::string(static_cast<size_t>(e.depth) * 2, ' ') << "step "
                              << e.step << ": " << e.detail << '\n';
            std::cout << (d.contains ? "CONTAINS_W7" : "NO_W7") << '\n';
            if (witness) {
                if (d.witness) print_witness(*d.witness);
                else if (d.contains)
                    std::cerr << "witness unavailable: verdict proven by decomposition\n";
            }
            return d.contains ? 0 : 1;
        }
        if (oracle->parsed()) {
            Graph g = load_graph(input, fmt);
            std::optional<int> c;
            if (oracle->count("--centre")) {
                if (centre < 0 || centre >= g.vertex_count()) {
                    std::cerr << "centre out of range\n";
                    return 2;
                }
                c = centre;
            }
            OracleResult res = contains_wheel(g, k, c);
            std::cout << (res.found() ? "YES" : "NO") << '\n';
            if (witness && res.witness) print_witness(*res.witness);
            return res.found() ? 0 : 1;
        }
        if (cutsets->parsed()) {
            auto kind = parse_cutset_kind(kind_name);
            if (!kind) {
                std::cerr << "unknown cutset kind: " << kind_name << '\n';
                return 2;
            }
            Graph g = load_graph(input, fmt);
            auto f = find_cutset(g, *kind);
            if (!f) {
                std::cout << "NONE\n";
                return 1;
            }
            std::cout << trace_line(*f) << '\n';
            return 0;
        }
        if (reduce->parsed()) {
            Graph g = load_graph(input, fmt);
            auto f = find_reduction(g);
            if (!f) {
                std::cout << "NONE\n";
                return 1;
            }
            std::cout << trace_line(*f) << '\n'
                      << serialize_graph6(apply_reduction(g, *f, 7)) << '\n';
            return 0;
        }
        // difftest
        auto suite = parse_suite(suite_name);
        if (!suite) {
            std::cerr << "unknown suite: " << suite_name << '\n';
            return 2;
        }
        SuiteConfig cfg;
        cfg.count = count;
        cfg.seed = seed;
        cfg.oracle_ceiling = ceiling;
        SuiteReport rep = run_suite(*suite, cfg);
        std::cout << rep.text();
        return rep.pass() ? 0 : 1;
    } catch (const parse_error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
