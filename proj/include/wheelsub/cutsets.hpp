#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>

#include "graph.hpp"

namespace wheelsub {

// Separating structures the decomposition splits on. The Int* kinds are pure
// edge cutsets; the EV* kinds mix vertices and edges. "a" variants trade the
// larger side-size requirement for degree/neighbour conditions on the cutset
// vertices.
enum class CutsetKind {
    Int3Edge,
    Int4Edge,
    Int1111,
    EV1,
    EV1a,
    EV2,
    EV2a,
    EV3,
    EV3a,
    EV4,
    EV4a,
};

inline constexpr std::array<CutsetKind, 11> all_cutset_kinds = {
    CutsetKind::Int3Edge, CutsetKind::Int4Edge, CutsetKind::Int1111, CutsetKind::EV1,
    CutsetKind::EV1a,     CutsetKind::EV2,      CutsetKind::EV2a,    CutsetKind::EV3,
    CutsetKind::EV3a,     CutsetKind::EV4,      CutsetKind::EV4a,
};

inline std::string_view to_string(CutsetKind k) {
    switch (k) {
        case CutsetKind::Int3Edge: return "int3edge";
        case CutsetKind::Int4Edge: return "int4edge";
        case CutsetKind::Int1111: return "int1111";
        case CutsetKind::EV1: return "ev1";
        case CutsetKind::EV1a: return "ev1a";
        case CutsetKind::EV2: return "ev2";
        case CutsetKind::EV2a: return "ev2a";
        case CutsetKind::EV3: return "ev3";
        case CutsetKind::EV3a: return "ev3a";
        case CutsetKind::EV4: return "ev4";
        case CutsetKind::EV4a: return "ev4a";
    }
    return "?";
}

inline std::optional<CutsetKind> parse_cutset_kind(std::string_view s) {
    for (CutsetKind k : all_cutset_kinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

// A verified separating structure. Removing vertices and edges from G leaves
// exactly the two components side1 and side2 (side1 holds the least vertex),
// and every cutset edge joins side1 to side2.
struct CutsetFinding {
    CutsetKind kind = CutsetKind::Int3Edge;
    std::vector<int> vertices;  // sorted
    std::vector<Edge> edges;    // sorted
    std::vector<int> side1, side2;
    friend bool operator==(const CutsetFinding&, const CutsetFinding&) = default;
};

inline std::string trace_line(const CutsetFinding& f) {
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
    s += " sides=" + std::to_string(f.side1.size()) + "/" + std::to_string(f.side2.size());
    return s;
}

namespace detail {

inline bool edge_in(const std::vector<Edge>& sorted_edges, int u, int v) {
    return std::binary_search(sorted_edges.begin(), sorted_edges.end(), Edge(u, v));
}

// Component ids over unblocked vertices of g minus the removed edges.
// comp[v] == -1 for blocked vertices; returns the component count. Ids are
// assigned in increasing order of each component's least vertex.
inline int masked_component_ids(const Graph& g, const std::vector<char>& blocked,
                                const std::vector<Edge>& removed, std::vector<int>& comp) {
    const int n = g.vertex_count();
    comp.assign(n, -2);
    for (int v = 0; v < n; ++v)
        if (blocked[v]) comp[v] = -1;
    int nc = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -2) continue;
        comp[s] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbours(v)) {
                if (comp[u] != -2) continue;
                if (!removed.empty() && edge_in(removed, v, u)) continue;
                comp[u] = nc;
                stack.push_back(u);
            }
        }
        ++nc;
    }
    return nc;
}

// Cut edges (bridges) of the masked graph, sorted. If ncomp is non-null it
// receives the masked graph's component count.
inline std::vector<Edge> masked_cut_edges(const Graph& g, const std::vector<char>& blocked,
                                          const std::vector<Edge>& removed, int* ncomp = nullptr) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), idx(n, 0);
    std::vector<int> stack;
    std::vector<Edge> out;
    int timer = 0, nc = 0;
    for (int root = 0; root < n; ++root) {
        if (blocked[root] || disc[root] >= 0) continue;
        ++nc;
        disc[root] = low[root] = timer++;
        parent[root] = -1;
        idx[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            auto nbrs = g.neighbours(v);
            if (idx[v] < static_cast<int>(nbrs.size())) {
                int u = nbrs[idx[v]++];
                if (blocked[u] || u == parent[v]) continue;
                if (!removed.empty() && edge_in(removed, v, u)) continue;
                if (disc[u] >= 0) {
                    low[v] = std::min(low[v], disc[u]);
                    continue;
                }
                disc[u] = low[u] = timer++;
                parent[u] = v;
                idx[u] = 0;
                stack.push_back(u);
            } else {
                stack.pop_back();
                if (parent[v] >= 0) {
                    low[parent[v]] = std::min(low[parent[v]], low[v]);
                    if (low[v] > disc[parent[v]]) out.push_back(Edge(parent[v], v));
                }
            }
        }
    }
    if (ncomp) *ncomp = nc;
    std::sort(out.begin(), out.end());
    return out;
}

inline int sharing_pairs(const std::vector<Edge>& es) {
    int c = 0;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            if (es[i].shares_endpoint(es[j])) ++c;
    return c;
}

}  // namespace detail

// True iff every pair of vertices stays k-edge-connected (single-source max
// flow with unit capacities, each flow capped at k). False for graphs with
// fewer than two vertices unless k <= 0.
inline bool edge_connectivity_at_least(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k <= 0) return true;
    if (n < 2) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < k) return false;
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> net(n);
    for (const Edge& e : g.edges()) {
        net[e.a].push_back({e.b, 1, static_cast<int>(net[e.b].size())});
        net[e.b].push_back({e.a, 1, static_cast<int>(net[e.a].size()) - 1});
    }
    std::vector<int> prev_v(n), prev_a(n), queue;
    for (int t = 1; t < n; ++t) {
        for (auto& row : net)
            for (Arc& a : row) a.cap = 1;
        int flow = 0;
        while (flow < k) {
            std::fill(prev_v.begin(), prev_v.end(), -1);
            prev_v[0] = 0;
            queue.assign(1, 0);
            for (size_t qi = 0; qi < queue.size() && prev_v[t] < 0; ++qi) {
                int v = queue[qi];
                for (int ai = 0; ai < static_cast<int>(net[v].size()); ++ai) {
                    const Arc& a = net[v][ai];
                    if (a.cap > 0 && prev_v[a.to] < 0) {
                        prev_v[a.to] = v;
                        prev_a[a.to] = ai;
                        queue.push_back(a.to);
                    }
                }
            }
            if (prev_v[t] < 0) break;
            for (int v = t; v != 0; v = prev_v[v]) {
                Arc& a = net[prev_v[v]][prev_a[v]];
                a.cap -= 1;
                net[v][a.rev].cap += 1;
            }
            ++flow;
        }
        if (flow < k) return false;
    }
    return true;
}

inline bool verify_cutset(const Graph& g, const CutsetFinding& f) {
    const int n = g.vertex_count();
    int want_v = 0;
    size_t e_lo = 0, e_hi = 0;
    switch (f.kind) {
        case CutsetKind::Int3Edge: want_v = 0, e_lo = 1, e_hi = 3; break;
        case CutsetKind::Int4Edge:
        case CutsetKind::Int1111: want_v = 0, e_lo = e_hi = 4; break;
        case CutsetKind::EV1:
        case CutsetKind::EV1a: want_v = 1, e_lo = e_hi = 2; break;
        case CutsetKind::EV2:
        case CutsetKind::EV2a: want_v = 2, e_lo = e_hi = 1; break;
        case CutsetKind::EV3:
        case CutsetKind::EV3a: want_v = 1, e_lo = e_hi = 4; break;
        case CutsetKind::EV4:
        case CutsetKind::EV4a: want_v = 2, e_lo = e_hi = 2; break;
    }
    if (static_cast<int>(f.vertices.size()) != want_v) return false;
    if (f.edges.size() < e_lo || f.edges.size() > e_hi) return false;
    for (size_t i = 0; i < f.vertices.size(); ++i) {
        if (f.vertices[i] < 0 || f.vertices[i] >= n) return false;
        if (i > 0 && f.vertices[i - 1] >= f.vertices[i]) return false;
    }
    for (size_t i = 0; i < f.edges.size(); ++i) {
        const Edge& e = f.edges[i];
        if (e.a < 0 || e.b >= n || !g.has_edge(e)) return false;
        if (i > 0 && !(f.edges[i - 1] < e)) return false;
    }

    std::vector<char> blocked(n, 0);
    for (int v : f.vertices) blocked[v] = 1;
    std::vector<int> comp;
    if (detail::masked_component_ids(g, blocked, f.edges, comp) != 2) return false;
    std::vector<int> s1, s2;
    for (int v = 0; v < n; ++v) {
        if (comp[v] == 0) s1.push_back(v);
        if (comp[v] == 1) s2.push_back(v);
    }
    if (f.side1 != s1 || f.side2 != s2) return false;
    // every cutset edge must join the two sides
    for (const Edge& e : f.edges)
        if (comp[e.a] < 0 || comp[e.b] < 0 || comp[e.a] == comp[e.b]) return false;

    const int n1 = static_cast<int>(s1.size()), n2 = static_cast<int>(s2.size());
    auto sides_at_least = [&](int t) { return n1 >= t && n2 >= t; };
    auto nbrs_in = [&](int v, int side) {
        int c = 0;
        for (int u : g.neighbours(v))
            if (comp[u] == side) ++c;
        return c;
    };
    // the relaxed cutset-vertex condition of the "a" kinds
    auto v_relaxed = [&](int v) {
        return g.degree(v) < 7 || nbrs_in(v, 0) <= 2 || nbrs_in(v, 1) <= 2;
    };

    switch (f.kind) {
        case CutsetKind::Int3Edge: return sides_at_least(2);
        case CutsetKind::Int4Edge: return sides_at_least(3) && detail::sharing_pairs(f.edges) == 1;
        case CutsetKind::Int1111: return sides_at_least(5) && detail::sharing_pairs(f.edges) == 0;
        case CutsetKind::EV1: return sides_at_least(4);
        case CutsetKind::EV1a: return sides_at_least(3) && g.degree(f.vertices[0]) < 7;
        case CutsetKind::EV2: return sides_at_least(4);
        case CutsetKind::EV2a:
            return sides_at_least(3) && v_relaxed(f.vertices[0]) && v_relaxed(f.vertices[1]);
        case CutsetKind::EV3:
        case CutsetKind::EV3a: {
            if (!sides_at_least(f.kind == CutsetKind::EV3 ? 4 : 3)) return false;
            if (f.kind == CutsetKind::EV3a && !v_relaxed(f.vertices[0])) return false;
            // one side holds exactly two distinct endpoints of the four edges;
            // the strict variant also needs the edges split two apiece
            for (int side = 0; side < 2; ++side) {
                std::array<int, 4> end{};
                for (int i = 0; i < 4; ++i)
                    end[i] = comp[f.edges[i].a] == side ? f.edges[i].a : f.edges[i].b;
                std::array<int, 4> uniq = end;
                std::sort(uniq.begin(), uniq.end());
                if (std::unique(uniq.begin(), uniq.end()) - uniq.begin() != 2) continue;
                if (f.kind == CutsetKind::EV3) return true;
                if (std::count(end.begin(), end.end(), uniq[0]) == 2) return true;
            }
            return false;
        }
        case CutsetKind::EV4:
        case CutsetKind::EV4a: {
            if (!sides_at_least(f.kind == CutsetKind::EV4 ? 4 : 3)) return false;
            if (f.kind == CutsetKind::EV4a &&
                !(v_relaxed(f.vertices[0]) && v_relaxed(f.vertices[1])))
                return false;
            // one side's endpoints of the two edges coincide in a single vertex
            for (int side = 0; side < 2; ++side) {
                int a = comp[f.edges[0].a] == side ? f.edges[0].a : f.edges[0].b;
                int b = comp[f.edges[1].a] == side ? f.edges[1].a : f.edges[1].b;
                if (a == b) return true;
            }
            return false;
        }
    }
    return false;
}

namespace detail {

using CandidateSink = std::function<void(std::vector<int>, std::vector<Edge>)>;

// Pure edge cutsets. Any verified set E' = {f1 < ... < fk} has G - (E' \ {fk})
// connected (the last edge rejoins the two sides), so fk is a cut edge of it.
inline void edge_cutset_candidates(const Graph& g, CutsetKind kind, const CandidateSink& sink) {
    const int n = g.vertex_count();
    if (edge_connectivity_at_least(g, kind == CutsetKind::Int3Edge ? 4 : 5)) return;
    const std::vector<Edge> es = g.edges();
    const int m = static_cast<int>(es.size());
    const std::vector<char> noblock(n, 0);
    int nc = 0;
    if (kind == CutsetKind::Int3Edge) {
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                std::vector<Edge> pre = {es[i], es[j]};
                auto cut = masked_cut_edges(g, noblock, pre, &nc);
                if (nc != 1) continue;
                for (const Edge& f3 : cut)
                    if (es[j] < f3) sink({}, {es[i], es[j], f3});
            }
        }
        return;
    }
    const bool disjoint = kind == CutsetKind::Int1111;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int s_ij = es[i].shares_endpoint(es[j]) ? 1 : 0;
            if (disjoint && s_ij) continue;
            for (int k = j + 1; k < m; ++k) {
                int s3 = s_ij + (es[i].shares_endpoint(es[k]) ? 1 : 0) +
                         (es[j].shares_endpoint(es[k]) ? 1 : 0);
                if (s3 > (disjoint ? 0 : 1)) continue;
                std::vector<Edge> pre = {es[i], es[j], es[k]};
                auto cut = masked_cut_edges(g, noblock, pre, &nc);
                if (nc != 1) continue;
                for (const Edge& f4 : cut) {
                    if (!(es[k] < f4)) continue;
                    int total = s3 + (es[i].shares_endpoint(f4) ? 1 : 0) +
                                (es[j].shares_endpoint(f4) ? 1 : 0) +
                                (es[k].shares_endpoint(f4) ? 1 : 0);
                    if (total != (disjoint ? 0 : 1)) continue;
                    sink({}, {es[i], es[j], es[k], f4});
                }
            }
        }
    }
}

// {e1, e2, v}: {e1, e2} is a crossing 2-edge cut of G - v, so e2 is a cut edge
// of (G - v) - e1. Vertices whose removal stays 3-edge-connected are skipped.
inline void ev1_candidates(const Graph& g, CutsetKind kind, const CandidateSink& sink) {
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    std::vector<int> rest(n - 1);
    for (int v = 0; v < n; ++v) {
        if (kind == CutsetKind::EV1a && g.degree(v) >= 7) continue;
        rest.clear();
        for (int u = 0; u < n; ++u)
            if (u != v) rest.push_back(u);
        if (edge_connectivity_at_least(induced_subgraph(g, rest).graph, 3)) continue;
        blocked[v] = 1;
        int nc = 0;
        for (const Edge& f1 : g.edges()) {
            if (f1.meets(v)) continue;
            auto cut = masked_cut_edges(g, blocked, {f1}, &nc);
            if (nc != 1) continue;
            for (const Edge& f2 : cut)
                if (f1 < f2) sink({v}, {f1, f2});
        }
        blocked[v] = 0;
    }
}

// {e, v1, v2}: e is a cut edge of G - {v1, v2}.
inline void ev2_candidates(const Graph& g, const CandidateSink& sink) {
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    for (int v1 = 0; v1 < n; ++v1) {
        blocked[v1] = 1;
        for (int v2 = v1 + 1; v2 < n; ++v2) {
            blocked[v2] = 1;
            int nc = 0;
            auto cut = masked_cut_edges(g, blocked, {}, &nc);
            if (nc == 1)
                for (const Edge& e : cut) sink({v1, v2}, {e});
            blocked[v2] = 0;
        }
        blocked[v1] = 0;
    }
}

// {v, e1..e4} with the four edges meeting exactly two vertices v1, v2 on one
// side: the other side is a full component of G - {v, v1, v2} receiving
// exactly four edges from {v1, v2}.
inline void ev3_candidates(const Graph& g, const CandidateSink& sink) {
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    std::vector<int> comp;
    std::vector<int> ecnt;
    for (int v = 0; v < n; ++v) {
        blocked[v] = 1;
        for (int v1 = 0; v1 < n; ++v1) {
            if (v1 == v) continue;
            blocked[v1] = 1;
            for (int v2 = v1 + 1; v2 < n; ++v2) {
                if (v2 == v) continue;
                blocked[v2] = 1;
                int nc = masked_component_ids(g, blocked, {}, comp);
                if (nc >= 2) {
                    ecnt.assign(nc, 0);
                    for (int u : {v1, v2})
                        for (int w : g.neighbours(u))
                            if (comp[w] >= 0) ++ecnt[comp[w]];
                    for (int c = 0; c < nc; ++c) {
                        if (ecnt[c] != 4) continue;
                        std::vector<Edge> e4;
                        for (int u : {v1, v2})
                            for (int w : g.neighbours(u))
                                if (comp[w] == c) e4.push_back(Edge(u, w));
                        std::sort(e4.begin(), e4.end());
                        sink({v}, std::move(e4));
                    }
                }
                blocked[v2] = 0;
            }
            blocked[v1] = 0;
        }
        blocked[v] = 0;
    }
}

// {v1, v2, e1, e2} with both edges meeting a single vertex u on one side: the
// other side is a full component of G - {v1, v2, u} receiving exactly two
// edges from u.
inline void ev4_candidates(const Graph& g, const CandidateSink& sink) {
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    std::vector<int> comp;
    std::vector<int> ecnt;
    for (int v1 = 0; v1 < n; ++v1) {
        blocked[v1] = 1;
        for (int v2 = v1 + 1; v2 < n; ++v2) {
            blocked[v2] = 1;
            for (int u = 0; u < n; ++u) {
                if (u == v1 || u == v2) continue;
                blocked[u] = 1;
                int nc = masked_component_ids(g, blocked, {}, comp);
                if (nc >= 2) {
                    ecnt.assign(nc, 0);
                    for (int w : g.neighbours(u))
                        if (comp[w] >= 0) ++ecnt[comp[w]];
                    for (int c = 0; c < nc; ++c) {
                        if (ecnt[c] != 2) continue;
                        std::vector<Edge> e2;
                        for (int w : g.neighbours(u))
                            if (comp[w] == c) e2.push_back(Edge(u, w));
                        std::sort(e2.begin(), e2.end());
                        sink({v1, v2}, std::move(e2));
                    }
                }
                blocked[u] = 0;
            }
            blocked[v2] = 0;
        }
        blocked[v1] = 0;
    }
}

}  // namespace detail

// Lexicographically least verified finding of the kind over the sorted
// (vertices, edges) key, or absent. Candidate generation is optimized per
// kind but covers every verified finding; verify_cutset re-checks each one.
inline std::optional<CutsetFinding> find_cutset(const Graph& g, CutsetKind kind) {
    const int n = g.vertex_count();
    std::optional<CutsetFinding> best;
    detail::CandidateSink offer = [&](std::vector<int> vs, std::vector<Edge> es) {
        if (best && std::tie(best->vertices, best->edges) <= std::tie(vs, es)) return;
        std::vector<char> blocked(n, 0);
        for (int v : vs) blocked[v] = 1;
        std::vector<int> comp;
        if (detail::masked_component_ids(g, blocked, es, comp) != 2) return;
        CutsetFinding cand;
        cand.kind = kind;
        cand.vertices = std::move(vs);
        cand.edges = std::move(es);
        for (int v = 0; v < n; ++v) {
            if (comp[v] == 0) cand.side1.push_back(v);
            if (comp[v] == 1) cand.side2.push_back(v);
        }
        if (verify_cutset(g, cand)) best = std::move(cand);
    };
    switch (kind) {
        case CutsetKind::Int3Edge:
        case CutsetKind::Int4Edge:
        case CutsetKind::Int1111: detail::edge_cutset_candidates(g, kind, offer); break;
        case CutsetKind::EV1:
        case CutsetKind::EV1a: detail::ev1_candidates(g, kind, offer); break;
        case CutsetKind::EV2:
        case CutsetKind::EV2a: detail::ev2_candidates(g, offer); break;
        case CutsetKind::EV3:
        case CutsetKind::EV3a: detail::ev3_candidates(g, offer); break;
        case CutsetKind::EV4:
        case CutsetKind::EV4a: detail::ev4_candidates(g, offer); break;
    }
    return best;
}

}  // namespace wheelsub
