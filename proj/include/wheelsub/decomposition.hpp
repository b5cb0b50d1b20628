#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "connectivity.hpp"
#include "cutsets.hpp"
#include "graph.hpp"
#include "subdivision.hpp"

namespace wheelsub {

struct SplitProvenance {
    CutsetFinding finding;
    std::string gadgets;  // rebuild chosen per side, e.g. "g1p[z3] g2p[ker5]"
};

// The two strictly smaller graphs derived from a split: g1p keeps side1 and
// replaces side2, g2p the reverse. Wheel-subdivision presence is preserved:
// g has one iff g1p or g2p does.
struct SplitResult {
    Graph g1p;
    Graph g2p;
    SplitProvenance provenance;
};

namespace detail {

// Rebuild plan for one side of an interior cutset. Slot k names keep[k] while
// k < keep.size(), and fresh vertex k - keep.size() otherwise. All
// side-internal edges of the replaced side are discarded; `inner` and `links`
// fully describe the gadget.
struct Gadget {
    std::vector<int> keep;                   // replaced-side vertices retained (old ids, ascending)
    int fresh = 0;                           // new vertices appended after all kept ones
    std::vector<std::pair<int, int>> inner;  // slot-slot gadget edges
    std::vector<std::pair<int, int>> links;  // (slot, old id outside the replaced side)
    std::string note;
};

inline Graph replace_side(const Graph& g, const CutsetFinding& f, const std::vector<int>& replaced,
                          const Gadget& gd) {
    const int n = g.vertex_count();
    std::vector<char> in_replaced(n, 0);
    for (int v : replaced) in_replaced[v] = 1;
    std::vector<char> kept(n, 0);
    for (int v = 0; v < n; ++v) kept[v] = !in_replaced[v];
    for (int v : gd.keep) kept[v] = 1;

    std::vector<int> old_to_new(n, -1);
    int nn = 0;
    for (int v = 0; v < n; ++v)
        if (kept[v]) old_to_new[v] = nn++;
    auto slot_id = [&](int s) {
        return s < static_cast<int>(gd.keep.size()) ? old_to_new[gd.keep[s]]
                                                    : nn + s - static_cast<int>(gd.keep.size());
    };

    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (!kept[e.a] || !kept[e.b]) continue;
        if (in_replaced[e.a] && in_replaced[e.b]) continue;  // superseded by gadget edges
        if (std::binary_search(f.edges.begin(), f.edges.end(), e)) continue;  // reattached below
        es.push_back(Edge(old_to_new[e.a], old_to_new[e.b]));
    }
    for (auto [s, t] : gd.inner) es.push_back(Edge(slot_id(s), slot_id(t)));
    for (auto [s, v] : gd.links) es.push_back(Edge(slot_id(s), old_to_new[v]));
    return Graph(nn + gd.fresh, es);
}

// Distinct endpoints of the cutset edges inside `side`, ascending.
inline std::vector<int> side_endpoints(const CutsetFinding& f, const std::vector<int>& side) {
    std::vector<int> out;
    for (const Edge& e : f.edges) {
        if (sorted_contains(side, e.a)) out.push_back(e.a);
        if (sorted_contains(side, e.b)) out.push_back(e.b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Fixed gadgets for the pure edge cutsets. Keeping the replaced side's own
// cut-edge endpoints and completing them pairwise is faithful here because a
// 3-connected side hanging on 3 or 4 independent edges supports every routing
// pattern the kept side could ask of it; the endpoints themselves enforce the
// one constraint that matters, that crossings through edges sharing an
// endpoint meet at that endpoint.
inline Gadget make_gadget(const Graph& g, const CutsetFinding& f, const std::vector<int>& kept_side,
                          const std::vector<int>& replaced_side) {
    (void)g;
    Gadget gd;
    auto near_of = [&](const Edge& e) { return sorted_contains(kept_side, e.a) ? e.a : e.b; };

    switch (f.kind) {
        case CutsetKind::Int3Edge: {
            gd.fresh = 1;
            for (int p : side_endpoints(f, kept_side)) gd.links.push_back({0, p});
            gd.note = "z1";
            break;
        }
        case CutsetKind::Int4Edge: {
            // Keep the replaced side's own cut-edge endpoints (3 of them when the
            // sharing pair meets in this side, else 4), complete them pairwise, and
            // leave each cut edge attached where it was. Giving every near endpoint
            // access to every gadget vertex instead is wrong: when two cut edges
            // meet in the replaced side, crossings through them can never be
            // vertex-disjoint, and a gadget that forgets the shared endpoint can
            // manufacture a wheel the original graph cannot route.
            gd.keep = side_endpoints(f, replaced_side);
            const int k = static_cast<int>(gd.keep.size());
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) gd.inner.push_back({i, j});
            for (const Edge& e : f.edges) {
                int far = sorted_contains(replaced_side, e.a) ? e.a : e.b;
                int s = static_cast<int>(std::lower_bound(gd.keep.begin(), gd.keep.end(), far) -
                                         gd.keep.begin());
                gd.links.push_back({s, near_of(e)});
            }
            gd.note = k == 3 ? "z3" : "z4";
            break;
        }
        case CutsetKind::Int1111: {
            gd.keep = side_endpoints(f, replaced_side);
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) gd.inner.push_back({i, j});
            for (const Edge& e : f.edges) {
                int far = sorted_contains(replaced_side, e.a) ? e.a : e.b;
                int s = static_cast<int>(std::lower_bound(gd.keep.begin(), gd.keep.end(), far) -
                                         gd.keep.begin());
                gd.links.push_back({s, near_of(e)});
            }
            gd.note = "k4";
            break;
        }
        default:
            throw std::logic_error("make_gadget: vertex+edge kinds use side kernels");
    }
    return gd;
}

// ---------- side kernels for the vertex+edge cutset kinds ----------
//
// No fixed gadget is faithful for these kinds: which boundary routings a side
// supports depends on the instance (a cut vertex with a single neighbour in
// the side supports one route into it, never two disjoint ones). Instead the
// replaced side is shrunk to a kernel: the union of witness path systems, one
// per supported boundary connection pattern. Every derived graph is then an
// induced subgraph of g, so a wheel subdivision found there is one of g
// verbatim; conversely a wheel subdivision of g whose footprint in the
// replaced side matches a catalogued pattern reroutes through the kernel's
// witness for that pattern, and heavy footprints (the hub or most of the rim
// inside the side) survive in the derived graph that keeps the side whole.

// A boundary connection pattern. Pattern vertices 0..anchor_terms.size()-1
// are pinned to terminals (anchor_terms[i] indexes stubs ++ cutverts); the
// rest are free branch vertices that must land inside the side.
struct SidePattern {
    Graph pattern;
    std::vector<int> anchor_terms;
    int cut_mask = 0;  // cutvert j participates iff bit j
    int edges = 0;
    int free = 0;
};

// Catalog generator. Terminals 0..s-1 are the side's cut-edge endpoints
// ("stubs", paths through them continue into the kept side), s..s+c-1 the
// cutset vertices. Elements:
//   - a path between two terminals,
//   - a branch vertex joined to three terminals,
//   - a run between two terminals carrying 2 or 3 branch vertices, each
//     spoked to a cutset vertex (repeats allowed) or to distinct stubs.
// Composites are unions of elements sharing only terminals, capped by what a
// wheel subdivision can place in the lighter side: degree <= 3 per terminal,
// <= 3 branch vertices, <= 8 paths, <= 5 elements.
inline const std::vector<SidePattern>& side_catalog(int s, int c) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<SidePattern>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({s, c});
    if (it != cache.end()) return it->second;

    const int T = s + c;
    struct Elem {
        std::vector<std::pair<int, int>> edges;  // terminal ids < 8, free ids >= 8
        int free = 0;
    };
    std::vector<Elem> pool;
    for (int a = 0; a < T; ++a)
        for (int b = a + 1; b < T; ++b) pool.push_back({{{a, b}}, 0});
    for (int a = 0; a < T; ++a)
        for (int b = a + 1; b < T; ++b)
            for (int d = b + 1; d < T; ++d) pool.push_back({{{8, a}, {8, b}, {8, d}}, 1});
    for (int a = 0; a < T; ++a)
        for (int b = a + 1; b < T; ++b)
            for (int cc : {2, 3}) {
                std::vector<int> tg(cc);
                auto emit = [&] {
                    Elem e;
                    e.free = cc;
                    e.edges.push_back({a, 8});
                    for (int i = 0; i + 1 < cc; ++i) e.edges.push_back({8 + i, 9 + i});
                    e.edges.push_back({7 + cc, b});
                    for (int i = 0; i < cc; ++i) e.edges.push_back({8 + i, tg[i]});
                    pool.push_back(std::move(e));
                };
                auto rec = [&](auto&& self, int i) -> void {
                    if (i == cc) {
                        emit();
                        return;
                    }
                    for (int t = 0; t < T; ++t) {
                        if (t == a || t == b) continue;
                        if (t < s) {  // stub targets pairwise distinct
                            bool dup = false;
                            for (int j = 0; j < i; ++j) dup = dup || tg[j] == t;
                            if (dup) continue;
                        }
                        tg[i] = t;
                        self(self, i + 1);
                    }
                };
                rec(rec, 0);
            }

    std::vector<SidePattern> out;
    std::vector<int> picked;
    std::vector<int> deg(T, 0);
    int free_sum = 0, edge_sum = 0;
    auto build = [&] {
        std::vector<std::pair<int, int>> es;
        int fbase = 0;
        for (int ei : picked) {
            const Elem& e = pool[ei];
            for (auto [x, y] : e.edges) {
                auto remap = [&](int v) { return v < 8 ? v : 64 + fbase + (v - 8); };
                es.push_back({remap(x), remap(y)});
            }
            fbase += e.free;
        }
        std::vector<int> used;
        for (auto [x, y] : es) {
            if (x < 8) used.push_back(x);
            if (y < 8) used.push_back(y);
        }
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        const int k = static_cast<int>(used.size());
        auto pid = [&](int v) {
            if (v >= 64) return k + (v - 64);
            return static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
        };
        std::vector<Edge> pes;
        for (auto [x, y] : es) pes.push_back(Edge(pid(x), pid(y)));
        SidePattern sp;
        sp.pattern = Graph(k + fbase, pes);
        sp.anchor_terms = used;
        for (int t : used)
            if (t >= s) sp.cut_mask |= 1 << (t - s);
        sp.edges = edge_sum;
        sp.free = free_sum;
        out.push_back(std::move(sp));
    };
    auto dfs = [&](auto&& self, int start) -> void {
        if (!picked.empty()) build();
        if (picked.size() == 5) return;
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            const Elem& e = pool[i];
            int ne = static_cast<int>(e.edges.size());
            if (free_sum + e.free > 3 || edge_sum + ne > 8) continue;
            bool ok = true;
            for (auto [x, y] : e.edges) {
                if (x < 8 && deg[x] + 1 > 3) ok = false;
                if (y < 8 && deg[y] + 1 > 3) ok = false;
            }
            if (!ok) continue;
            for (auto [x, y] : e.edges) {
                if (x < 8) ++deg[x];
                if (y < 8) ++deg[y];
            }
            free_sum += e.free;
            edge_sum += ne;
            picked.push_back(i);
            self(self, i + 1);
            picked.pop_back();
            free_sum -= e.free;
            edge_sum -= ne;
            for (auto [x, y] : e.edges) {
                if (x < 8) --deg[x];
                if (y < 8) --deg[y];
            }
        }
    };
    dfs(dfs, 0);
    std::stable_sort(out.begin(), out.end(), [](const SidePattern& a, const SidePattern& b) {
        if (a.edges != b.edges) return a.edges > b.edges;
        return a.free > b.free;
    });
    return cache.emplace(std::make_pair(s, c), std::move(out)).first->second;
}

struct SideKernel {
    std::vector<int> vertices;  // sorted subset of the replaced side
    bool decided = true;        // false when a pattern search ran out of budget
    int patterns = 0;           // catalogued patterns the side supports
};

// Query host: chosen vertices plus the participating cutset vertices, with
// edges between cutset vertices dropped so paths run through the side only.
struct QueryHost {
    Graph qg;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

inline QueryHost make_query_host(const Graph& g, const std::vector<int>& side_part,
                                 const std::vector<int>& cutverts, int mask) {
    const int n = g.vertex_count();
    std::vector<char> take(n, 0), is_cut(n, 0);
    for (int v : side_part) take[v] = 1;
    for (size_t j = 0; j < cutverts.size(); ++j)
        if (mask & (1 << j)) {
            take[cutverts[j]] = 1;
            is_cut[cutverts[j]] = 1;
        }
    QueryHost h;
    h.old_to_new.assign(n, -1);
    int nn = 0;
    for (int v = 0; v < n; ++v)
        if (take[v]) {
            h.old_to_new[v] = nn++;
            h.new_to_old.push_back(v);
        }
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (!take[e.a] || !take[e.b]) continue;
        if (is_cut[e.a] && is_cut[e.b]) continue;
        es.push_back(Edge(h.old_to_new[e.a], h.old_to_new[e.b]));
    }
    h.qg = Graph(nn, es);
    return h;
}

// Vertices of the witness inside the side, pruned greedily: drop any vertex
// without which the pattern is still realizable. Keeps kernels near-minimal so
// a side shrinks whenever it carries mass no boundary routing needs.
inline std::vector<int> minimal_system(const Graph& g, const SidePattern& sp,
                                       const std::vector<int>& stubs,
                                       const std::vector<int>& cutverts, std::vector<int> sys,
                                       uint64_t budget) {
    auto term_vertex = [&](int t) {
        return t < static_cast<int>(stubs.size()) ? stubs[t]
                                                  : cutverts[t - static_cast<int>(stubs.size())];
    };
    for (size_t i = 0; i < sys.size();) {
        std::vector<int> probe = sys;
        probe.erase(probe.begin() + static_cast<long>(i));
        QueryHost h = make_query_host(g, probe, cutverts, sp.cut_mask);
        std::vector<std::pair<int, int>> anchors;
        bool anchored = true;
        for (size_t j = 0; j < sp.anchor_terms.size() && anchored; ++j) {
            int hv = h.old_to_new[term_vertex(sp.anchor_terms[j])];
            if (hv < 0)
                anchored = false;
            else
                anchors.push_back({static_cast<int>(j), hv});
        }
        if (!anchored) {
            ++i;  // dropped an anchor terminal, keep it
            continue;
        }
        OracleResult r = contains_subdivision(h.qg, sp.pattern, anchors, budget);
        if (!r.found()) {
            ++i;
            continue;
        }
        std::vector<int> next;  // restart from the (possibly smaller) new witness
        for (const auto& path : r.witness->paths)
            for (int pv : path) {
                int ov = h.new_to_old[pv];
                if (!sorted_contains(cutverts, ov)) next.push_back(ov);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        sys = std::move(next);
        i = 0;
    }
    return sys;
}

inline SideKernel side_kernel(const Graph& g, const CutsetFinding& f,
                              const std::vector<int>& replaced) {
    const std::vector<int> stubs = side_endpoints(f, replaced);
    const std::vector<int>& cutverts = f.vertices;
    const auto& catalog = side_catalog(static_cast<int>(stubs.size()),
                                       static_cast<int>(cutverts.size()));
    const int nmask = 1 << cutverts.size();
    const uint64_t query_budget = 8'000'000;

    std::vector<std::optional<QueryHost>> side_host(nmask);
    std::vector<std::optional<QueryHost>> ker_host(nmask);
    std::vector<char> in_side(g.vertex_count(), 0);
    for (int v : replaced) in_side[v] = 1;

    SideKernel k;
    std::vector<char> in_kernel(g.vertex_count(), 0);
    auto term_vertex = [&](int t) {
        return t < static_cast<int>(stubs.size()) ? stubs[t]
                                                  : cutverts[t - static_cast<int>(stubs.size())];
    };

    for (const SidePattern& sp : catalog) {
        if (k.vertices.size() == replaced.size()) break;  // side swallowed, nothing to gain

        // already realizable inside the kernel found so far?
        if (!ker_host[sp.cut_mask]) ker_host[sp.cut_mask].emplace(
            make_query_host(g, k.vertices, cutverts, sp.cut_mask));
        const QueryHost& kh = *ker_host[sp.cut_mask];
        std::vector<std::pair<int, int>> anchors;
        bool anchored = true;
        for (size_t i = 0; i < sp.anchor_terms.size() && anchored; ++i) {
            int hv = kh.old_to_new[term_vertex(sp.anchor_terms[i])];
            if (hv < 0)
                anchored = false;
            else
                anchors.push_back({static_cast<int>(i), hv});
        }
        if (anchored) {
            OracleResult r = contains_subdivision(kh.qg, sp.pattern, anchors, query_budget);
            if (r.status == SearchStatus::exhausted) return {{}, false, 0};
            if (r.found()) {
                ++k.patterns;
                continue;
            }
        }

        // search the whole side
        if (!side_host[sp.cut_mask]) side_host[sp.cut_mask].emplace(
            make_query_host(g, replaced, cutverts, sp.cut_mask));
        const QueryHost& sh = *side_host[sp.cut_mask];
        anchors.clear();
        for (size_t i = 0; i < sp.anchor_terms.size(); ++i)
            anchors.push_back({static_cast<int>(i), sh.old_to_new[term_vertex(sp.anchor_terms[i])]});
        OracleResult r = contains_subdivision(sh.qg, sp.pattern, anchors, query_budget);
        if (r.status == SearchStatus::exhausted) return {{}, false, 0};
        if (!r.found()) continue;
        ++k.patterns;
        std::vector<int> sys;
        for (const auto& path : r.witness->paths)
            for (int pv : path) {
                int ov = sh.new_to_old[pv];
                if (in_side[ov]) sys.push_back(ov);
            }
        std::sort(sys.begin(), sys.end());
        sys.erase(std::unique(sys.begin(), sys.end()), sys.end());
        sys = minimal_system(g, sp, stubs, cutverts, std::move(sys), query_budget);
        bool grew = false;
        for (int ov : sys)
            if (!in_kernel[ov]) {
                in_kernel[ov] = 1;
                k.vertices.push_back(ov);
                grew = true;
            }
        if (grew) {
            std::sort(k.vertices.begin(), k.vertices.end());
            for (auto& h : ker_host) h.reset();  // kernel changed, rebuild lazily
        }
    }
    return k;
}

inline bool is_vertex_edge_kind(CutsetKind k) {
    switch (k) {
        case CutsetKind::Int3Edge:
        case CutsetKind::Int4Edge:
        case CutsetKind::Int1111:
            return false;
        default:
            return true;
    }
}

}  // namespace detail

// Outcome of planning a split: either both strictly smaller derived graphs, or
// the reason no faithful pair exists for this finding.
struct SplitAttempt {
    std::optional<SplitResult> result;
    std::string reason;
};

inline SplitAttempt try_split(const Graph& g, const CutsetFinding& f) {
    if (!detail::is_vertex_edge_kind(f.kind)) {
        detail::Gadget gx = detail::make_gadget(g, f, f.side1, f.side2);
        detail::Gadget gy = detail::make_gadget(g, f, f.side2, f.side1);
        if (gx.keep.size() + gx.fresh >= f.side2.size() ||
            gy.keep.size() + gy.fresh >= f.side1.size())
            return {std::nullopt, "a side is nothing but its own cut endpoints"};
        Graph g1p = detail::replace_side(g, f, f.side2, gx);
        Graph g2p = detail::replace_side(g, f, f.side1, gy);
        return {SplitResult{std::move(g1p), std::move(g2p),
                            {f, "g1p[" + gx.note + "] g2p[" + gy.note + "]"}},
                {}};
    }

    detail::SideKernel k2 = detail::side_kernel(g, f, f.side2);
    if (!k2.decided) return {std::nullopt, "side-2 kernel search exhausted its budget"};
    if (k2.vertices.size() >= f.side2.size()) return {std::nullopt, "side-2 kernel spans the side"};
    detail::SideKernel k1 = detail::side_kernel(g, f, f.side1);
    if (!k1.decided) return {std::nullopt, "side-1 kernel search exhausted its budget"};
    if (k1.vertices.size() >= f.side1.size()) return {std::nullopt, "side-1 kernel spans the side"};

    auto keep_union = [&](const std::vector<int>& side, const std::vector<int>& kernel) {
        std::vector<int> vs = side;
        vs.insert(vs.end(), f.vertices.begin(), f.vertices.end());
        vs.insert(vs.end(), kernel.begin(), kernel.end());
        std::sort(vs.begin(), vs.end());
        return vs;
    };
    Graph g1p = induced_subgraph(g, keep_union(f.side1, k2.vertices)).graph;
    Graph g2p = induced_subgraph(g, keep_union(f.side2, k1.vertices)).graph;
    return {SplitResult{std::move(g1p), std::move(g2p),
                        {f, "g1p[ker" + std::to_string(k2.vertices.size()) + "] g2p[ker" +
                                std::to_string(k1.vertices.size()) + "]"}},
            {}};
}

// True when a faithful split into two strictly smaller graphs exists.
inline bool split_shrinks(const Graph& g, const CutsetFinding& f) {
    return try_split(g, f).result.has_value();
}

inline SplitResult split(const Graph& g, const CutsetFinding& f) {
    if (!verify_cutset(g, f)) throw std::invalid_argument("split: finding does not verify");
    SplitAttempt a = try_split(g, f);
    if (!a.result) throw std::logic_error("split: " + a.reason);
    return *std::move(a.result);
}

inline std::string split_trace_line(const SplitResult& r) {
    const CutsetFinding& f = r.provenance.finding;
    std::string s{to_string(f.kind)};
    if (!f.vertices.empty()) {
        s += " v=";
        for (size_t i = 0; i < f.vertices.size(); ++i)
            s += (i ? "," : "") + std::to_string(f.vertices[i]);
    }
    if (!f.edges.empty()) {
        s += " e=";
        for (size_t i = 0; i < f.edges.size(); ++i)
            s += (i ? "," : "") + std::to_string(f.edges[i].a) + "-" + std::to_string(f.edges[i].b);
    }
    s += " sizes=" + std::to_string(r.g1p.vertex_count()) + "/" +
         std::to_string(r.g2p.vertex_count());
    return s;
}

// Split a 2-connected graph on a 2-vertex separator: add the separator edge,
// then return each bridge of the pair as its own (strictly smaller) graph.
inline std::vector<Graph> split_on_2_separator(const Graph& g, std::pair<int, int> sep) {
    auto [a, b] = sep;
    if (a == b) throw std::invalid_argument("split_on_2_separator: separator vertices coincide");
    std::vector<Edge> es = g.edges();
    es.push_back(Edge(a, b));
    Graph gp(g.vertex_count(), es);
    std::vector<Bridge> bs = bridges_of(gp, {std::min(a, b), std::max(a, b)});
    if (bs.size() < 2) throw std::invalid_argument("split_on_2_separator: pair does not separate");
    std::vector<Graph> out;
    out.reserve(bs.size());
    for (const Bridge& br : bs) out.push_back(induced_subgraph(gp, br.vertices).graph);
    return out;
}

}  // namespace wheelsub
