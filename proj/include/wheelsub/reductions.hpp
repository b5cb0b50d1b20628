#pragma once

// Subdivision-preserving reductions. Each one deletes the interior of a small
// bridge over a 3- or 4-vertex set S and possibly adds one edge between
// members of S; the result contains a W7-subdivision iff the input does.
// find_reduction scans kinds in a fixed order and returns the first applicable
// finding; verify_reduction rechecks every defining clause of a finding.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wheelsub/graph.hpp"
#include "wheelsub/subdivision.hpp"

namespace wheelsub {

enum class ReductionKind { R1A, R1B, R1C, R2A, R2B, R6, R7, R8, R1BIG };

inline constexpr std::array<ReductionKind, 9> all_reduction_kinds = {
    ReductionKind::R1A, ReductionKind::R1B, ReductionKind::R1C,
    ReductionKind::R2A, ReductionKind::R2B, ReductionKind::R6,
    ReductionKind::R7,  ReductionKind::R8,  ReductionKind::R1BIG,
};

inline std::string_view to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::R1A: return "r1a";
        case ReductionKind::R1B: return "r1b";
        case ReductionKind::R1C: return "r1c";
        case ReductionKind::R2A: return "r2a";
        case ReductionKind::R2B: return "r2b";
        case ReductionKind::R6: return "r6";
        case ReductionKind::R7: return "r7";
        case ReductionKind::R8: return "r8";
        case ReductionKind::R1BIG: return "r1big";
    }
    return "?";
}

inline std::optional<ReductionKind> parse_reduction_kind(std::string_view s) {
    for (ReductionKind k : all_reduction_kinds)
        if (s == to_string(k)) return k;
    return std::nullopt;
}

// S is role-ordered: [u, v, w] for the three-vertex kinds, [t, u, v, w] for
// the four-vertex ones. bridge_x and every evidence entry hold full bridge
// vertex sets (attachments included). Carrier entries ("A", "B", "C") appear
// only when the corresponding pair of S-vertices is not adjacent; witness
// bridges beyond the definitional ones never appear.
struct ReductionFinding {
    ReductionKind kind = ReductionKind::R1A;
    std::vector<int> S;
    std::vector<int> bridge_x;
    std::vector<Edge> add_edges;
    std::map<std::string, std::vector<int>> evidence;
    friend bool operator==(const ReductionFinding&, const ReductionFinding&) = default;
};

inline std::string trace_line(const ReductionFinding& f) {
    std::string out(to_string(f.kind));
    out += " S=";
    for (size_t i = 0; i < f.S.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.S[i]);
    }
    int drop = 0;
    for (int v : f.bridge_x)
        if (std::find(f.S.begin(), f.S.end(), v) == f.S.end()) ++drop;
    out += " drop=" + std::to_string(drop) + " add=";
    if (f.add_edges.empty()) {
        out += "none";
    } else {
        for (size_t i = 0; i < f.add_edges.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(f.add_edges[i].a) + "-" + std::to_string(f.add_edges[i].b);
        }
    }
    return out;
}

namespace detail {

inline bool is_triple_kind(ReductionKind k) { return k <= ReductionKind::R2B; }

inline const Bridge* bridge_with(const std::vector<Bridge>& bs, const std::vector<int>& vs) {
    for (const Bridge& b : bs)
        if (b.vertices == vs) return &b;
    return nullptr;
}

inline int interior_neighbours(const Graph& g, int i, const Bridge& b) {
    int c = 0;
    for (int x : g.neighbours(i))
        if (sorted_contains(b.vertices, x) && !sorted_contains(b.attachments, x)) ++c;
    return c;
}

// "either i has degree < k, or every bridge contains at most one neighbour of
// i not in S" — the condition keeping a wheel from centring on i
inline bool spread_condition(const Graph& g, int i, const std::vector<Bridge>& bs, int k) {
    if (g.degree(i) < k) return true;
    for (const Bridge& b : bs)
        if (interior_neighbours(g, i, b) > 1) return false;
    return true;
}

// a path through the bridge interior joins p and q iff both attach to it
inline bool carries(const Bridge& b, int p, int q) {
    return sorted_contains(b.attachments, p) && sorted_contains(b.attachments, q);
}

inline int x_interior_size(ReductionKind k) {
    switch (k) {
        case ReductionKind::R1A:
        case ReductionKind::R2A: return 1;
        case ReductionKind::R1B:
        case ReductionKind::R2B: return 2;
        case ReductionKind::R1C: return 3;
        default: return -1;  // size-bounded, not fixed
    }
}

inline std::optional<Edge> required_edge(ReductionKind k, const std::vector<int>& S) {
    switch (k) {
        case ReductionKind::R1A:
        case ReductionKind::R1B:
        case ReductionKind::R1C: return Edge(S[0], S[2]);   // uw
        case ReductionKind::R2A:
        case ReductionKind::R2B: return Edge(S[1], S[0]);   // vu
        case ReductionKind::R6: return Edge(S[3], S[1]);    // wu
        case ReductionKind::R7: return std::nullopt;
        case ReductionKind::R8: return Edge(S[2], S[3]);    // vw
        case ReductionKind::R1BIG: return Edge(S[1], S[3]); // uw
    }
    return std::nullopt;
}

inline std::vector<Edge> canonical_add(const Graph& g, ReductionKind k, const std::vector<int>& S) {
    auto e = required_edge(k, S);
    if (!e || g.has_edge(*e)) return {};
    return {*e};
}

}  // namespace detail

inline bool verify_reduction(const Graph& g, const ReductionFinding& f, int k = 7) {
    using namespace detail;
    const int n = g.vertex_count();
    const size_t want_s = is_triple_kind(f.kind) ? 3 : 4;
    if (f.S.size() != want_s) return false;
    for (int v : f.S)
        if (v < 0 || v >= n) return false;
    std::vector<int> s_sorted(f.S);
    std::sort(s_sorted.begin(), s_sorted.end());
    if (std::adjacent_find(s_sorted.begin(), s_sorted.end()) != s_sorted.end()) return false;

    auto bs = bridges_of(g, s_sorted);
    const Bridge* X = bridge_with(bs, f.bridge_x);
    if (!X) return false;

    auto ev = [&](const char* name) -> const Bridge* {
        auto it = f.evidence.find(name);
        if (it == f.evidence.end()) return nullptr;
        return bridge_with(bs, it->second);
    };
    auto keys_subset_of = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, _] : f.evidence)
            if (std::find_if(allowed.begin(), allowed.end(),
                             [&](const char* a) { return key == a; }) == allowed.end())
                return false;
        return true;
    };
    auto same = [](const Bridge* a, const Bridge* b) {
        return a && b && a->vertices == b->vertices;
    };
    if (f.add_edges != canonical_add(g, f.kind, f.S)) return false;

    switch (f.kind) {
        case ReductionKind::R1A:
        case ReductionKind::R1B:
        case ReductionKind::R1C:
        case ReductionKind::R2A:
        case ReductionKind::R2B: {
            const int u = f.S[0], v = f.S[1], w = f.S[2];
            const bool r2 = f.kind == ReductionKind::R2A || f.kind == ReductionKind::R2B;
            if (r2 && !(g.degree(u) < k && g.degree(w) < k)) return false;
            if (!keys_subset_of(r2 ? std::initializer_list<const char*>{"Y", "Z", "A"}
                                   : std::initializer_list<const char*>{"Y", "Z", "A", "B"}))
                return false;
            if (static_cast<int>(X->interior().size()) != x_interior_size(f.kind)) return false;
            const Bridge *Y = ev("Y"), *Z = ev("Z");
            if (!Y || !Z || same(Y, X) || same(Z, X) || same(Y, Z)) return false;
            if (f.kind != ReductionKind::R1A && f.kind != ReductionKind::R2A) {
                if (!bridge_contains_subdivision_of(g, *Y, *X, s_sorted)) return false;
                if (!bridge_contains_subdivision_of(g, *Z, *X, s_sorted)) return false;
            }
            const Bridge* A = ev("A");
            if (g.adjacent(v, w)) {
                if (A) return false;
            } else {
                if (!A || !carries(*A, v, w)) return false;
                if (same(A, X) || same(A, Y) || same(A, Z)) return false;
            }
            if (!r2) {
                const Bridge* B = ev("B");
                if (g.adjacent(v, u)) {
                    if (B) return false;
                } else {
                    if (!B || !carries(*B, v, u)) return false;
                    if (same(B, X) || same(B, Y) || same(B, Z) || same(B, A)) return false;
                }
            }
            return true;
        }
        case ReductionKind::R6: {
            const int u = f.S[1], v = f.S[2], w = f.S[3];
            if (!keys_subset_of({})) return false;
            std::vector<int> uvw = {u, v, w};
            std::sort(uvw.begin(), uvw.end());
            if (X->attachments != uvw) return false;
            if (static_cast<int>(X->vertices.size()) > k) return false;
            for (int i : {u, v, w})
                if (!spread_condition(g, i, bs, k)) return false;
            return g.adjacent(v, u) && g.adjacent(v, w);
        }
        case ReductionKind::R7: {
            const int t = f.S[0], u = f.S[1], v = f.S[2], w = f.S[3];
            if (!keys_subset_of({"W", "Y", "Z", "A", "B", "C"})) return false;
            if (X->attachments != s_sorted) return false;
            const Bridge *W = ev("W"), *Y = ev("Y"), *Z = ev("Z");
            if (!W || !Y || !Z) return false;
            const std::array<const Bridge*, 4> core = {X, W, Y, Z};
            for (size_t i = 0; i < core.size(); ++i) {
                if (core[i]->attachments != s_sorted) return false;
                for (size_t j = i + 1; j < core.size(); ++j)
                    if (same(core[i], core[j])) return false;
            }
            const int xsize = static_cast<int>(X->vertices.size());
            if (xsize > k) {
                if (xsize != k + 1) return false;
                int joining = 0;
                for (int s : f.S) joining += interior_neighbours(g, s, *X);
                if (joining != 4) return false;
            }
            for (int i : f.S)
                if (!spread_condition(g, i, bs, k)) return false;
            std::vector<const Bridge*> used(core.begin(), core.end());
            auto carrier_ok = [&](int p, int q, const char* name) {
                const Bridge* c = ev(name);
                if (g.adjacent(p, q)) return c == nullptr;
                if (!c || !carries(*c, p, q)) return false;
                for (const Bridge* b : used)
                    if (same(c, b)) return false;
                used.push_back(c);
                return true;
            };
            return carrier_ok(v, w, "A") && carrier_ok(v, u, "B") && carrier_ok(v, t, "C");
        }
        case ReductionKind::R8: {
            const int u = f.S[1], v = f.S[2], w = f.S[3];
            if (!keys_subset_of({"Y", "Z", "A"})) return false;
            std::vector<int> uvw = {u, v, w};
            std::sort(uvw.begin(), uvw.end());
            if (X->attachments != uvw) return false;
            if (static_cast<int>(X->vertices.size()) > k) return false;
            const Bridge *Y = ev("Y"), *Z = ev("Z");
            if (!Y || !Z || same(Y, X) || same(Z, X) || same(Y, Z)) return false;
            for (int i : uvw)
                if (!sorted_contains(Y->attachments, i) || !sorted_contains(Z->attachments, i))
                    return false;
            for (int i : f.S)
                if (!spread_condition(g, i, bs, k)) return false;
            const Bridge* A = ev("A");
            if (g.adjacent(v, u)) {
                if (A) return false;
            } else {
                if (!A || !carries(*A, v, u)) return false;
                if (same(A, X) || same(A, Y) || same(A, Z)) return false;
            }
            return true;
        }
        case ReductionKind::R1BIG: {
            const int u = f.S[1], v = f.S[2], w = f.S[3];
            if (!keys_subset_of({"Y", "Z", "A", "B"})) return false;
            std::vector<int> uvw = {u, v, w};
            std::sort(uvw.begin(), uvw.end());
            if (X->attachments != uvw) return false;
            if (static_cast<int>(X->vertices.size()) > k) return false;
            const Bridge *Y = ev("Y"), *Z = ev("Z");
            if (!Y || !Z || same(Y, X) || same(Z, X) || same(Y, Z)) return false;
            if (Y->attachments != uvw) return false;
            for (int i : uvw)
                if (!sorted_contains(Z->attachments, i)) return false;
            for (int i : uvw)
                if (g.degree(i) >= k && interior_neighbours(g, i, *X) > 1) return false;
            if (!g.adjacent(v, w)) return false;
            const Bridge *A = ev("A"), *B = ev("B");
            if (g.adjacent(v, u)) return !A && !B;
            if (!A || !B || !carries(*A, v, u) || !carries(*B, v, u)) return false;
            for (const Bridge* c : {A, B})
                if (same(c, X) || same(c, Y) || same(c, Z)) return false;
            return !same(A, B);
        }
    }
    return false;
}

namespace detail {

// walk r-subsets of 0..n-1 in lexicographic order; stop when f returns true
template <typename F>
inline void for_each_vertex_set(int n, int r, F&& f) {
    if (r > n) return;
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) c[i] = i;
    while (true) {
        if (f(c)) return;
        int i = r - 1;
        while (i >= 0 && c[i] == n - r + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    }
}

struct ReductionScan {
    const Graph& g;
    ReductionKind kind;
    int k;
    std::optional<ReductionFinding> found;

    bool emit(const std::vector<int>& roles, const Bridge& X,
              std::vector<std::pair<const char*, const Bridge*>> witnesses) {
        ReductionFinding f;
        f.kind = kind;
        f.S = roles;
        f.bridge_x = X.vertices;
        f.add_edges = canonical_add(g, kind, roles);
        for (auto& [name, b] : witnesses)
            if (b) f.evidence.emplace(name, b->vertices);
        if (!verify_reduction(g, f, k)) throw std::logic_error("reduction finder emitted an invalid finding");
        found = std::move(f);
        return true;
    }

    // R1A/R1B/R1C/R2A/R2B share a scaffold: a size-limited bridge X, two
    // witness bridges Y and Z (with anchored containment of X except for the
    // single-interior-vertex kinds), and carrier paths for v-w and (R1 family
    // only) v-u
    bool triple_family(const std::vector<int>& roles, const std::vector<Bridge>& bs) {
        const int u = roles[0], v = roles[1], w = roles[2];
        const bool r2 = kind == ReductionKind::R2A || kind == ReductionKind::R2B;
        const bool need_containment =
            kind != ReductionKind::R1A && kind != ReductionKind::R2A;
        if (r2 && !(g.degree(u) < k && g.degree(w) < k)) return false;
        const size_t xs = static_cast<size_t>(x_interior_size(kind));
        const int nb = static_cast<int>(bs.size());
        std::vector<int> sset(roles);
        std::sort(sset.begin(), sset.end());
        std::map<std::pair<int, int>, bool> memo;
        auto contains_x = [&](int yi, int xi) {
            auto key = std::make_pair(yi, xi);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            bool r = bridge_contains_subdivision_of(g, bs[yi], bs[xi], sset);
            memo.emplace(key, r);
            return r;
        };
        for (int xi = 0; xi < nb; ++xi) {
            if (bs[xi].vertices.size() - bs[xi].attachments.size() != xs) continue;
            for (int yi = 0; yi < nb; ++yi) {
                if (yi == xi) continue;
                if (need_containment && !contains_x(yi, xi)) continue;
                for (int zi = yi + 1; zi < nb; ++zi) {
                    if (zi == xi) continue;
                    if (need_containment && !contains_x(zi, xi)) continue;
                    auto free_bridge = [&](int i, int skip = -1) {
                        return i != xi && i != yi && i != zi && i != skip;
                    };
                    const bool need_a = !g.adjacent(v, w);
                    const bool need_b = !r2 && !g.adjacent(v, u);
                    if (!need_a && !need_b) {
                        return emit(roles, bs[xi], {{"Y", &bs[yi]}, {"Z", &bs[zi]}});
                    }
                    for (int ai = 0; ai < (need_a ? nb : 1); ++ai) {
                        const Bridge* A = nullptr;
                        if (need_a) {
                            if (!free_bridge(ai) || !carries(bs[ai], v, w)) continue;
                            A = &bs[ai];
                        }
                        if (!need_b)
                            return emit(roles, bs[xi],
                                        {{"Y", &bs[yi]}, {"Z", &bs[zi]}, {"A", A}});
                        for (int bi = 0; bi < nb; ++bi) {
                            if (!free_bridge(bi, need_a ? ai : -1)) continue;
                            if (!carries(bs[bi], v, u)) continue;
                            return emit(roles, bs[xi],
                                        {{"Y", &bs[yi]}, {"Z", &bs[zi]}, {"A", A}, {"B", &bs[bi]}});
                        }
                    }
                }
            }
        }
        return false;
    }

    bool r6(const std::vector<int>& roles, const std::vector<Bridge>& bs) {
        const int u = roles[1], v = roles[2], w = roles[3];
        if (!g.adjacent(v, u) || !g.adjacent(v, w)) return false;
        for (int i : {u, v, w})
            if (!spread_condition(g, i, bs, k)) return false;
        std::vector<int> uvw = {u, v, w};
        std::sort(uvw.begin(), uvw.end());
        for (const Bridge& X : bs)
            if (X.attachments == uvw && static_cast<int>(X.vertices.size()) <= k)
                return emit(roles, X, {});
        return false;
    }

    bool r7(const std::vector<int>& roles, const std::vector<Bridge>& bs,
            const std::vector<int>& sset) {
        const int t = roles[0], u = roles[1], v = roles[2], w = roles[3];
        const int nb = static_cast<int>(bs.size());
        std::vector<int> full;
        for (int i = 0; i < nb; ++i)
            if (bs[i].attachments == sset) full.push_back(i);
        if (full.size() < 4) return false;
        for (int i : roles)
            if (!spread_condition(g, i, bs, k)) return false;
        for (int xi : full) {
            const int xsize = static_cast<int>(bs[xi].vertices.size());
            if (xsize > k) {
                if (xsize != k + 1) continue;
                int joining = 0;
                for (int s : sset) joining += interior_neighbours(g, s, bs[xi]);
                if (joining != 4) continue;
            }
            for (size_t a = 0; a < full.size(); ++a) {
                if (full[a] == xi) continue;
                for (size_t b = a + 1; b < full.size(); ++b) {
                    if (full[b] == xi) continue;
                    for (size_t c = b + 1; c < full.size(); ++c) {
                        if (full[c] == xi) continue;
                        const int wi = full[a], yi = full[b], zi = full[c];
                        const std::array<int, 4> used = {xi, wi, yi, zi};
                        // -1 marks "pair already adjacent, no carrier needed"
                        auto options = [&](int p, int q) {
                            std::vector<int> o;
                            if (g.adjacent(p, q)) {
                                o.push_back(-1);
                                return o;
                            }
                            for (int i = 0; i < nb; ++i)
                                if (std::find(used.begin(), used.end(), i) == used.end() &&
                                    carries(bs[i], p, q))
                                    o.push_back(i);
                            return o;
                        };
                        for (int ai : options(v, w))
                            for (int bi : options(v, u)) {
                                if (bi >= 0 && bi == ai) continue;
                                for (int ci : options(v, t)) {
                                    if (ci >= 0 && (ci == ai || ci == bi)) continue;
                                    return emit(roles, bs[xi],
                                                {{"W", &bs[wi]},
                                                 {"Y", &bs[yi]},
                                                 {"Z", &bs[zi]},
                                                 {"A", ai >= 0 ? &bs[ai] : nullptr},
                                                 {"B", bi >= 0 ? &bs[bi] : nullptr},
                                                 {"C", ci >= 0 ? &bs[ci] : nullptr}});
                                }
                            }
                    }
                }
            }
        }
        return false;
    }

    bool r8(const std::vector<int>& roles, const std::vector<Bridge>& bs) {
        const int u = roles[1], v = roles[2], w = roles[3];
        const int nb = static_cast<int>(bs.size());
        for (int i : roles)
            if (!spread_condition(g, i, bs, k)) return false;
        std::vector<int> uvw = {u, v, w};
        std::sort(uvw.begin(), uvw.end());
        auto attaches_uvw = [&](const Bridge& b) {
            for (int i : uvw)
                if (!sorted_contains(b.attachments, i)) return false;
            return true;
        };
        for (int xi = 0; xi < nb; ++xi) {
            if (bs[xi].attachments != uvw) continue;
            if (static_cast<int>(bs[xi].vertices.size()) > k) continue;
            for (int yi = 0; yi < nb; ++yi) {
                if (yi == xi || !attaches_uvw(bs[yi])) continue;
                for (int zi = yi + 1; zi < nb; ++zi) {
                    if (zi == xi || !attaches_uvw(bs[zi])) continue;
                    if (g.adjacent(v, u))
                        return emit(roles, bs[xi], {{"Y", &bs[yi]}, {"Z", &bs[zi]}});
                    for (int ai = 0; ai < nb; ++ai) {
                        if (ai == xi || ai == yi || ai == zi) continue;
                        if (!carries(bs[ai], v, u)) continue;
                        return emit(roles, bs[xi],
                                    {{"Y", &bs[yi]}, {"Z", &bs[zi]}, {"A", &bs[ai]}});
                    }
                }
            }
        }
        return false;
    }

    bool r1big(const std::vector<int>& roles, const std::vector<Bridge>& bs) {
        const int u = roles[1], v = roles[2], w = roles[3];
        if (!g.adjacent(v, w)) return false;
        const int nb = static_cast<int>(bs.size());
        std::vector<int> uvw = {u, v, w};
        std::sort(uvw.begin(), uvw.end());
        auto attaches_uvw = [&](const Bridge& b) {
            for (int i : uvw)
                if (!sorted_contains(b.attachments, i)) return false;
            return true;
        };
        for (int xi = 0; xi < nb; ++xi) {
            if (bs[xi].attachments != uvw) continue;
            if (static_cast<int>(bs[xi].vertices.size()) > k) continue;
            bool tame = true;
            for (int i : uvw)
                if (g.degree(i) >= k && interior_neighbours(g, i, bs[xi]) > 1) tame = false;
            if (!tame) continue;
            for (int yi = 0; yi < nb; ++yi) {
                if (yi == xi || bs[yi].attachments != uvw) continue;
                for (int zi = 0; zi < nb; ++zi) {
                    if (zi == xi || zi == yi || !attaches_uvw(bs[zi])) continue;
                    if (g.adjacent(v, u))
                        return emit(roles, bs[xi], {{"Y", &bs[yi]}, {"Z", &bs[zi]}});
                    for (int ai = 0; ai < nb; ++ai) {
                        if (ai == xi || ai == yi || ai == zi) continue;
                        if (!carries(bs[ai], v, u)) continue;
                        for (int bi = ai + 1; bi < nb; ++bi) {
                            if (bi == xi || bi == yi || bi == zi) continue;
                            if (!carries(bs[bi], v, u)) continue;
                            return emit(roles, bs[xi],
                                        {{"Y", &bs[yi]}, {"Z", &bs[zi]}, {"A", &bs[ai]},
                                         {"B", &bs[bi]}});
                        }
                    }
                }
            }
        }
        return false;
    }

    bool try_set(const std::vector<int>& sset) {
        auto bs = bridges_of(g, sset);
        const size_t min_bridges = [&] {
            switch (kind) {
                case ReductionKind::R6: return size_t{1};
                case ReductionKind::R7: return size_t{4};
                default: return size_t{3};
            }
        }();
        if (bs.size() < min_bridges) return false;
        std::vector<int> roles(sset);
        do {
            bool hit = false;
            switch (kind) {
                case ReductionKind::R1A:
                case ReductionKind::R1B:
                case ReductionKind::R1C:
                case ReductionKind::R2A:
                case ReductionKind::R2B: hit = triple_family(roles, bs); break;
                case ReductionKind::R6: hit = r6(roles, bs); break;
                case ReductionKind::R7: hit = r7(roles, bs, sset); break;
                case ReductionKind::R8: hit = r8(roles, bs); break;
                case ReductionKind::R1BIG: hit = r1big(roles, bs); break;
            }
            if (hit) return true;
        } while (std::next_permutation(roles.begin(), roles.end()));
        return false;
    }
};

}  // namespace detail

inline std::optional<ReductionFinding> find_reduction_of_kind(const Graph& g, ReductionKind kind,
                                                              int k = 7) {
    detail::ReductionScan scan{g, kind, k, std::nullopt};
    const int r = detail::is_triple_kind(kind) ? 3 : 4;
    detail::for_each_vertex_set(g.vertex_count(), r,
                                [&](const std::vector<int>& s) { return scan.try_set(s); });
    return scan.found;
}

inline std::optional<ReductionFinding> find_reduction(const Graph& g, int k = 7) {
    for (ReductionKind kind : all_reduction_kinds)
        if (auto f = find_reduction_of_kind(g, kind, k)) return f;
    return std::nullopt;
}

inline Graph apply_reduction(const Graph& g, const ReductionFinding& f, int k = 7) {
    if (!verify_reduction(g, f, k))
        throw std::invalid_argument("apply_reduction: finding does not verify");
    std::vector<int> s_sorted(f.S);
    std::sort(s_sorted.begin(), s_sorted.end());
    std::vector<int> doomed = sorted_difference(f.bridge_x, s_sorted);
    return edit(g, doomed, {}, f.add_edges).graph;
}

}  // namespace wheelsub
