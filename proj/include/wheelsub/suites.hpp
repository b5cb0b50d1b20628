#pragma once

// Randomized instance construction and batch verification suites. The
// instance builders produce small 3-connected graphs on which a requested
// reduction kind is guaranteed to fire; the suites drive whole-module
// cross-checks (differential decide-vs-oracle runs, reduction preservation,
// split equivalence, cutset soundness).

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wheelsub/connectivity.hpp"
#include "wheelsub/cutsets.hpp"
#include "wheelsub/decomposition.hpp"
#include "wheelsub/families.hpp"
#include "wheelsub/graph.hpp"
#include "wheelsub/graph_io.hpp"
#include "wheelsub/reductions.hpp"
#include "wheelsub/solver.hpp"
#include "wheelsub/subdivision.hpp"

namespace wheelsub {

namespace detail {

struct InstanceDraft {
    int n = 0;
    std::vector<Edge> es;

    int vertex() { return n++; }
    std::vector<int> vertices(int count) {
        std::vector<int> out(count);
        for (int& v : out) v = vertex();
        return out;
    }
    void edge(int a, int b) { es.push_back(Edge(a, b)); }
    void clique(const std::vector<int>& vs) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
    }
    // a path through fresh vertices, attached so every interior vertex gets
    // degree >= 3: ends tie to (u,v) and (v,w), middles tie to v
    std::vector<int> chain_bridge(int len, int u, int v, int w) {
        auto xs = vertices(len);
        for (int i = 0; i + 1 < len; ++i) edge(xs[i], xs[i + 1]);
        edge(xs.front(), u);
        edge(xs.front(), v);
        edge(xs.back(), v);
        edge(xs.back(), w);
        for (int i = 1; i + 1 < len; ++i) edge(xs[i], v);
        return xs;
    }
    // one fresh vertex adjacent to each of the given vertices
    int star_bridge(const std::vector<int>& anchors) {
        int x = vertex();
        for (int a : anchors) edge(x, a);
        return x;
    }
    // a clique of size h hooked to the anchors one corner each; big enough
    // cliques bring a W7-subdivision with them
    std::vector<int> blob_bridge(int h, const std::vector<int>& anchors) {
        auto bs = vertices(h);
        clique(bs);
        for (size_t i = 0; i < anchors.size(); ++i) edge(bs[i % bs.size()], anchors[i]);
        return bs;
    }
    Graph graph() const { return Graph(n, es); }
};

inline Graph relabelled(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
    rnd::shuffle(perm, rng);
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const Edge& e : g.edges()) es.push_back(Edge(perm[e.a], perm[e.b]));
    return Graph(g.vertex_count(), es);
}

inline bool coin(std::mt19937_64& rng, double p = 0.5) { return rnd::unit(rng) < p; }

// The drafts below lay out S first, then the bridge to be removed, then the
// witness structure the kind demands. Coins vary interior sizes, carrier
// style (direct edge vs. extra bridge), and whether one witness bridge is a
// clique blob large enough to hold a W7-subdivision on its own.
inline Graph draft_r1_family(ReductionKind kind, std::mt19937_64& rng) {
    InstanceDraft d;
    int u = d.vertex(), v = d.vertex(), w = d.vertex();
    const int xs = x_interior_size(kind);
    const bool r2 = kind == ReductionKind::R2A || kind == ReductionKind::R2B;
    const bool blob = !r2 && xs <= 2 && coin(rng, 0.4);

    if (xs == 1)
        d.star_bridge({u, v, w});
    else
        d.chain_bridge(xs, u, v, w);

    // witness bridges Y and Z: copies of X's shape, which trivially contain
    // it anchored
    auto witness = [&] {
        if (xs == 1)
            d.star_bridge({u, v, w});
        else
            d.chain_bridge(xs, u, v, w);
    };
    witness();
    if (blob) {
        auto bs = d.blob_bridge(8, {u, v});
        d.edge(bs[0], v);  // front corner mirrors x_front: adjacent to u and v
        d.edge(bs[1], w);  // back corner mirrors x_back: adjacent to v and w
        d.edge(bs[1], v);
    } else {
        witness();
    }

    // P_w between v and w, plus P_u between v and u for the R1 kinds
    if (blob || coin(rng))
        d.edge(v, w);
    else
        d.star_bridge({u, v, w});
    if (!r2) {
        if (blob || coin(rng))
            d.edge(v, u);
        else
            d.star_bridge({u, v, w});
    }
    if (coin(rng, 0.3)) d.edge(u, w);
    return d.graph();
}

inline Graph draft_r6(std::mt19937_64& rng) {
    InstanceDraft d;
    int t = d.vertex(), u = d.vertex(), v = d.vertex(), w = d.vertex();
    d.edge(v, u);
    d.edge(v, w);
    d.edge(t, u);
    d.edge(t, w);
    int xs = 1 + rnd::below(rng, 3);
    if (xs == 1)
        d.star_bridge({u, v, w});
    else
        d.chain_bridge(xs, u, v, w);
    if (coin(rng, 0.4))
        d.blob_bridge(8, {t, u, v, w});
    else {
        auto ys = d.vertices(2);
        d.edge(ys[0], ys[1]);
        d.edge(ys[0], t);
        d.edge(ys[0], u);
        d.edge(ys[1], v);
        d.edge(ys[1], w);
    }
    return d.graph();
}

inline Graph draft_r7(std::mt19937_64& rng) {
    InstanceDraft d;
    int t = d.vertex(), u = d.vertex(), v = d.vertex(), w = d.vertex();
    d.edge(v, t);
    d.edge(v, u);
    d.edge(v, w);
    const bool blob = coin(rng, 0.4);
    const int mode = blob ? 0 : rnd::below(rng, 3);
    if (mode == 0) {
        d.star_bridge({t, u, v, w});
    } else if (mode == 1) {
        auto xs = d.vertices(2);
        d.edge(xs[0], xs[1]);
        d.edge(xs[0], t);
        d.edge(xs[0], u);
        d.edge(xs[1], v);
        d.edge(xs[1], w);
    } else {
        // |X| = 8 with exactly four edges joining S to the interior
        auto xs = d.vertices(4);
        d.edge(xs[0], xs[1]);
        d.edge(xs[0], xs[2]);
        d.edge(xs[3], xs[1]);
        d.edge(xs[3], xs[2]);
        d.edge(xs[0], xs[3]);
        d.edge(xs[1], xs[2]);
        d.edge(xs[0], t);
        d.edge(xs[1], u);
        d.edge(xs[2], v);
        d.edge(xs[3], w);
    }
    if (blob)
        d.blob_bridge(8, {t, u, v, w});
    else
        d.star_bridge({t, u, v, w});
    d.star_bridge({t, u, v, w});
    d.star_bridge({t, u, v, w});
    return d.graph();
}

inline Graph draft_r8(std::mt19937_64& rng) {
    InstanceDraft d;
    int t = d.vertex(), u = d.vertex(), v = d.vertex(), w = d.vertex();
    d.edge(t, u);
    d.edge(t, w);
    if (coin(rng, 0.3)) d.edge(v, w);
    int xs = 1 + rnd::below(rng, 2);
    if (xs == 1)
        d.star_bridge({u, v, w});
    else
        d.chain_bridge(xs, u, v, w);
    if (coin(rng, 0.4))
        d.blob_bridge(8, {t, u, v, w});
    else
        d.star_bridge({t, u, v, w});
    d.star_bridge({u, v, w});
    if (coin(rng))
        d.edge(v, u);
    else
        d.star_bridge({u, v, w});  // carrier A
    return d.graph();
}

inline Graph draft_r1big(std::mt19937_64& rng) {
    InstanceDraft d;
    int t = d.vertex(), u = d.vertex(), v = d.vertex(), w = d.vertex();
    d.edge(v, w);
    d.edge(t, u);
    d.edge(t, w);
    const bool uv_edge = coin(rng);
    // with carrier bridges in play v's degree can reach k, so keep X a
    // single vertex then (one neighbour of v in X, within the scoped bound)
    int xs = uv_edge ? 1 + rnd::below(rng, 2) : 1;
    if (xs == 1)
        d.star_bridge({u, v, w});
    else
        d.chain_bridge(xs, u, v, w);
    d.star_bridge({u, v, w});  // Y: attaches exactly u, v, w
    if (coin(rng, 0.4))
        d.blob_bridge(8, {u, v, w, t});
    else
        d.star_bridge({u, v, w, t});
    if (uv_edge)
        d.edge(v, u);
    else {
        d.star_bridge({u, v, w});  // carriers A and B
        d.star_bridge({u, v, w});
    }
    return d.graph();
}

// Two random blobs joined by a planted junction (edge bundles, tie vertices,
// or both); the shapes mirror the cutset kinds, so these hosts actually carry
// findings, unlike plain G(n,p) where interior cutsets are rare.
inline Graph junction_host_draft(std::mt19937_64& rng) {
    InstanceDraft d;
    const int na = 5 + rnd::below(rng, 4), nb = 5 + rnd::below(rng, 4);
    const double pa = 0.3 + 0.5 * rnd::unit(rng), pb = 0.3 + 0.5 * rnd::unit(rng);
    auto as = d.vertices(na), bs = d.vertices(nb);
    for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j)
            if (rnd::unit(rng) < pa) d.edge(as[i], as[j]);
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j)
            if (rnd::unit(rng) < pb) d.edge(bs[i], bs[j]);
    switch (rnd::below(rng, 6)) {
        case 0:
            for (int i : {0, 1, 2}) d.edge(as[i], bs[i]);
            break;
        case 1:  // two cut edges share an endpoint
            d.edge(as[0], bs[0]);
            d.edge(as[1], bs[0]);
            d.edge(as[2], bs[1]);
            d.edge(as[3], bs[2]);
            break;
        case 2:
            for (int i : {0, 1, 2, 3}) d.edge(as[i], bs[i]);
            break;
        case 3:
            d.star_bridge({as[0], as[1], bs[0], bs[1]});
            d.edge(as[2], bs[2]);
            d.edge(as[3], bs[3]);
            break;
        case 4:
            d.star_bridge({as[0], as[1], bs[0], bs[1]});
            d.star_bridge({as[2], as[3], bs[2], bs[3]});
            d.edge(as[4], bs[4]);
            break;
        default:  // incident pair: four edges from two carriers
            d.star_bridge({as[2], as[3], bs[2], bs[3]});
            d.edge(as[0], bs[0]);
            d.edge(as[0], bs[1]);
            d.edge(as[1], bs[2]);
            d.edge(as[1], bs[3]);
            break;
    }
    return relabelled(d.graph(), rng);
}

}  // namespace detail

// A random two-blob host with a planted junction, for split/cutset suites.
// Redraws until 3-connected; the junction shapes make that common enough.
inline Graph junction_host(std::mt19937_64& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        Graph g = detail::junction_host_draft(rng);
        if (is_3_connected(g)) return g;
    }
    throw std::logic_error("junction_host: drafts keep failing 3-connectivity");
}

// A small 3-connected graph on which find_reduction_of_kind(, kind) fires,
// randomly relabelled. Throws if the draft repeatedly fails its own gates
// (indicates a builder bug, not bad luck).
inline Graph reduction_instance(ReductionKind kind, std::mt19937_64& rng) {
    using namespace detail;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Graph g0 = [&] {
            switch (kind) {
                case ReductionKind::R6: return draft_r6(rng);
                case ReductionKind::R7: return draft_r7(rng);
                case ReductionKind::R8: return draft_r8(rng);
                case ReductionKind::R1BIG: return draft_r1big(rng);
                default: return draft_r1_family(kind, rng);
            }
        }();
        Graph g = relabelled(g0, rng);
        if (!is_3_connected(g)) continue;
        if (!find_reduction_of_kind(g, kind).has_value()) continue;
        return g;
    }
    throw std::logic_error("reduction_instance: drafts for kind " +
                           std::string(to_string(kind)) + " keep failing their gates");
}

// ---------- batch verification suites ----------

enum class Suite {
    differential,            // decide_w7 vs the exhaustive oracle on random graphs
    reduction_preservation,  // oracle(g) == oracle(reduced) for constructed instances
    split_equivalence,       // oracle(g) == oracle(g1p) || oracle(g2p) per fired split
    cutset_soundness,        // every reported finding verifies structurally
};

inline constexpr Suite all_suites[] = {Suite::differential, Suite::reduction_preservation,
                                       Suite::split_equivalence, Suite::cutset_soundness};

inline std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::differential: return "differential";
        case Suite::reduction_preservation: return "reduction_preservation";
        case Suite::split_equivalence: return "split_equivalence";
        case Suite::cutset_soundness: return "cutset_soundness";
    }
    return "?";
}

inline std::optional<Suite> parse_suite(std::string_view s) {
    for (Suite k : all_suites)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

struct SuiteConfig {
    int count = 100;         // instances to draw
    uint64_t seed = 1;       // master seed; instance i derives its own
    int oracle_ceiling = 20; // largest n the exhaustive oracle is consulted at
    int n_lo = 5, n_hi = 20; // random host sizes (clamped to the ceiling)
};

// One line per instance: "seed n verdict_left verdict_right [graph6]", the
// graph6 column present exactly on failures. Column meaning per suite:
// differential solver/oracle verdicts; reduction_preservation oracle before/
// after the rewrite; split_equivalence oracle of g / disjunction over the
// first fired split ("-" when every finding was refused or absent);
// cutset_soundness findings found/verified counts.
struct SuiteReport {
    Suite suite = Suite::differential;
    int instances = 0;
    int failures = 0;
    int skipped = 0;  // split suite: hosts where no finding fired
    std::vector<std::string> lines;
    std::vector<std::string> reproducers;  // self-contained replay lines

    bool pass() const { return failures == 0; }
    std::string text() const {
        std::string out = "suite=" + std::string(to_string(suite)) +
                          " instances=" + std::to_string(instances) +
                          " failures=" + std::to_string(failures);
        if (skipped) out += " skipped=" + std::to_string(skipped);
        out += "\n";
        for (const std::string& l : lines) out += l + "\n";
        for (const std::string& r : reproducers) out += r + "\n";
        out += pass() ? "PASS\n" : "FAIL\n";
        return out;
    }
};

namespace detail {

inline uint64_t instance_seed(uint64_t master, int i) {
    uint64_t x = master ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(i + 1));
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x;
}

inline const char* verdict(bool contains) { return contains ? "CONTAINS_W7" : "NO_W7"; }

struct InstanceOutcome {
    int instances = 0, failures = 0, skipped = 0;
    std::vector<std::string> lines, reproducers;
};

inline InstanceOutcome run_instance(Suite suite, const SuiteConfig& cfg, int n_lo, int n_hi,
                                    int i) {
    InstanceOutcome out;
    const uint64_t seed = instance_seed(cfg.seed, i);
    std::mt19937_64 rng(seed);
    switch (suite) {
        case Suite::differential: {
            const double p = std::array{0.3, 0.5, 0.8}[i % 3];
            const int n = n_lo + rnd::below(rng, n_hi - n_lo + 1);
            Graph g = random_gnp(n, p, rng());
            const bool sv = decide_w7(g).contains;
            const bool ov = contains_wheel(g, 7).found();
            ++out.instances;
            std::string line = std::to_string(seed) + " " + std::to_string(n) + " " +
                               verdict(sv) + " " + verdict(ov);
            if (sv != ov) {
                ++out.failures;
                line += " " + serialize_graph6(g);
                out.reproducers.push_back("REPRO suite=differential i=" + std::to_string(i) +
                                          " g6=" + serialize_graph6(g) + " solver=" +
                                          verdict(sv) + " oracle=" + verdict(ov));
            }
            out.lines.push_back(std::move(line));
            break;
        }
        case Suite::reduction_preservation: {
            const ReductionKind kind = all_reduction_kinds[i % all_reduction_kinds.size()];
            Graph g = reduction_instance(kind, rng);
            auto f = find_reduction_of_kind(g, kind);
            if (!f) throw std::logic_error("run_suite: instance lost its reduction");
            Graph reduced = apply_reduction(g, *f, 7);
            const bool before = contains_wheel(g, 7).found();
            const bool after = contains_wheel(reduced, 7).found();
            ++out.instances;
            std::string line = std::to_string(seed) + " " + std::to_string(g.vertex_count()) +
                               " " + verdict(before) + " " + verdict(after);
            if (before != after) {
                ++out.failures;
                line += " " + serialize_graph6(g);
                out.reproducers.push_back("REPRO suite=reduction_preservation i=" +
                                          std::to_string(i) + " g6=" + serialize_graph6(g) +
                                          " finding=" + trace_line(*f));
            }
            out.lines.push_back(std::move(line));
            break;
        }
        case Suite::split_equivalence: {
            Graph g = junction_host(rng);
            if (g.vertex_count() > cfg.oracle_ceiling) {
                ++out.instances;
                ++out.skipped;
                out.lines.push_back(std::to_string(seed) + " " +
                                    std::to_string(g.vertex_count()) + " - -");
                break;
            }
            const bool base = contains_wheel(g, 7).found();
            bool fired = false;
            for (CutsetKind k : all_cutset_kinds) {
                auto f = find_cutset(g, k);
                if (!f) continue;
                if (!verify_cutset(g, *f)) {
                    ++out.instances;
                    ++out.failures;
                    out.reproducers.push_back("REPRO suite=split_equivalence i=" +
                                              std::to_string(i) + " g6=" + serialize_graph6(g) +
                                              " kind=" + std::string(to_string(k)) +
                                              " error=finding-does-not-verify");
                    continue;
                }
                SplitAttempt a = try_split(g, *f);
                if (!a.result) continue;  // refusal: nothing to compare
                fired = true;
                const bool der = contains_wheel(a.result->g1p, 7).found() ||
                                 contains_wheel(a.result->g2p, 7).found();
                ++out.instances;
                std::string line = std::to_string(seed) + " " +
                                   std::to_string(g.vertex_count()) + " " + verdict(base) + " " +
                                   verdict(der);
                if (der != base) {
                    ++out.failures;
                    line += " " + serialize_graph6(g);
                    out.reproducers.push_back("REPRO suite=split_equivalence i=" +
                                              std::to_string(i) + " g6=" + serialize_graph6(g) +
                                              " finding=" + split_trace_line(*a.result));
                }
                out.lines.push_back(std::move(line));
            }
            if (!fired) {
                ++out.instances;
                ++out.skipped;
                out.lines.push_back(std::to_string(seed) + " " +
                                    std::to_string(g.vertex_count()) + " " + verdict(base) +
                                    " -");
            }
            break;
        }
        case Suite::cutset_soundness: {
            Graph g = (i % 2) ? junction_host(rng)
                              : random_gnp(n_lo + rnd::below(rng, n_hi - n_lo + 1),
                                           std::array{0.3, 0.5, 0.8}[i % 3], rng());
            int found = 0, verified = 0;
            for (CutsetKind k : all_cutset_kinds) {
                auto f = find_cutset(g, k);
                if (!f) continue;
                ++found;
                if (verify_cutset(g, *f)) {
                    ++verified;
                } else {
                    out.reproducers.push_back("REPRO suite=cutset_soundness i=" +
                                              std::to_string(i) + " g6=" + serialize_graph6(g) +
                                              " kind=" + std::string(to_string(k)));
                }
            }
            ++out.instances;
            if (found != verified) ++out.failures;
            std::string line = std::to_string(seed) + " " + std::to_string(g.vertex_count()) +
                               " found:" + std::to_string(found) + " verified:" +
                               std::to_string(verified);
            if (found != verified) line += " " + serialize_graph6(g);
            out.lines.push_back(std::move(line));
            break;
        }
    }
    return out;
}

}  // namespace detail

// Instances run on a small thread pool; the report is assembled in instance
// order afterwards, so output is identical to a sequential run.
inline SuiteReport run_suite(Suite suite, const SuiteConfig& cfg) {
    if (cfg.oracle_ceiling > 20)
        throw std::invalid_argument("run_suite: oracle ceiling above 20 is intractable");
    const int n_hi = std::min(cfg.n_hi, cfg.oracle_ceiling);
    const int n_lo = std::min(cfg.n_lo, n_hi);

    std::vector<detail::InstanceOutcome> outs(static_cast<size_t>(std::max(cfg.count, 0)));
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < cfg.count;) {
            try {
                outs[static_cast<size_t>(i)] = detail::run_instance(suite, cfg, n_lo, n_hi, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    const unsigned hw = std::thread::hardware_concurrency();
    const int pool = std::clamp(static_cast<int>(hw ? hw : 1), 1, std::max(cfg.count, 1));
    std::vector<std::thread> threads;
    for (int t = 1; t < pool; ++t) threads.emplace_back(worker);
    worker();
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);

    SuiteReport rep;
    rep.suite = suite;
    for (detail::InstanceOutcome& out : outs) {
        rep.instances += out.instances;
        rep.failures += out.failures;
        rep.skipped += out.skipped;
        for (std::string& l : out.lines) rep.lines.push_back(std::move(l));
        for (std::string& r : out.reproducers) rep.reproducers.push_back(std::move(r));
    }
    return rep;
}

}  // namespace wheelsub
