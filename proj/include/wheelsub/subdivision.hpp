#pragma once

#include <cstdint>
#include <optional>

#include "graph.hpp"

namespace wheelsub {

// A subdivision embedding: every pattern vertex maps to a distinct host branch
// vertex, every pattern edge to a host path; paths are pairwise internally
// disjoint and internally avoid all branch vertices.
struct SubdivisionWitness {
    std::vector<int> branch_map;              // pattern vertex -> host vertex
    std::vector<Edge> pattern_edges;          // sorted
    std::vector<std::vector<int>> paths;      // paths[i] realizes pattern_edges[i], endpoints included
};

enum class SearchStatus { found, absent, exhausted };

struct OracleResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<SubdivisionWitness> witness;
    bool found() const { return status == SearchStatus::found; }
};

// Validates a witness from scratch. Deliberately shares no state with the
// searcher; the searcher re-checks every positive answer through this.
inline bool check_witness(const Graph& host, const Graph& pattern, const SubdivisionWitness& w,
                          const std::vector<std::pair<int, int>>& anchors = {}) {
    const int np = pattern.vertex_count(), nh = host.vertex_count();
    if (static_cast<int>(w.branch_map.size()) != np) return false;
    std::vector<char> is_branch(nh, 0);
    for (int pv = 0; pv < np; ++pv) {
        int hv = w.branch_map[pv];
        if (hv < 0 || hv >= nh || is_branch[hv]) return false;
        is_branch[hv] = 1;
        if (host.degree(hv) < pattern.degree(pv)) return false;
    }
    for (auto [pv, hv] : anchors)
        if (pv < 0 || pv >= np || w.branch_map[pv] != hv) return false;
    if (w.pattern_edges != pattern.edges()) return false;
    if (w.paths.size() != w.pattern_edges.size()) return false;
    std::vector<char> interior_used(nh, 0);
    for (size_t i = 0; i < w.paths.size(); ++i) {
        const auto& p = w.paths[i];
        const Edge& e = w.pattern_edges[i];
        if (p.size() < 2) return false;
        if (p.front() != w.branch_map[e.a] || p.back() != w.branch_map[e.b]) return false;
        for (size_t j = 0; j + 1 < p.size(); ++j)
            if (!host.adjacent(p[j], p[j + 1])) return false;
        for (size_t j = 1; j + 1 < p.size(); ++j) {
            int v = p[j];
            if (v < 0 || v >= nh || is_branch[v] || interior_used[v]) return false;
            interior_used[v] = 1;
        }
    }
    return true;
}

namespace detail {

struct BudgetExhausted {};

struct Budget {
    uint64_t left = 0;
    bool limited = false;
    void tick() {
        if (!limited) return;
        if (left == 0) throw BudgetExhausted{};
        --left;
    }
};

class SubdivSearch {
  public:
    SubdivSearch(const Graph& host, const Graph& pattern,
                 const std::vector<std::pair<int, int>>& anchors, std::vector<int> canon_cycle,
                 Budget budget)
        : host_(host), pattern_(pattern), canon_(std::move(canon_cycle)), budget_(budget) {
        const int np = pattern_.vertex_count(), nh = host_.vertex_count();
        img_.assign(np, -1);
        role_.assign(nh, -1);
        used_.assign(nh, 0);
        pedges_ = pattern_.edges();
        realized_.assign(pedges_.size(), 0);
        paths_.resize(pedges_.size());
        anchor_of_.assign(np, -1);
        for (auto [pv, hv] : anchors) {
            if (pv < 0 || pv >= np || hv < 0 || hv >= nh)
                throw std::invalid_argument("contains_subdivision: anchor out of range");
            if (anchor_of_[pv] >= 0 && anchor_of_[pv] != hv)
                throw std::invalid_argument("contains_subdivision: conflicting anchors");
            anchor_of_[pv] = hv;
        }
        // assignment order: anchored vertices first, then decreasing pattern
        // degree, ties by id. Keeps wheel hubs in front.
        order_.resize(np);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int x, int y) {
            bool ax = anchor_of_[x] >= 0, ay = anchor_of_[y] >= 0;
            if (ax != ay) return ax;
            int dx = pattern_.degree(x), dy = pattern_.degree(y);
            if (dx != dy) return dx > dy;
            return x < y;
        });
        canon_pos_.assign(np, -1);
        for (size_t i = 0; i < canon_.size(); ++i) canon_pos_[canon_[i]] = static_cast<int>(i);
    }

    OracleResult run() {
        try {
            if (assign(0)) {
                OracleResult r;
                r.status = SearchStatus::found;
                r.witness = std::move(witness_);
                return r;
            }
            return {SearchStatus::absent, std::nullopt};
        } catch (BudgetExhausted&) {
            return {SearchStatus::exhausted, std::nullopt};
        }
    }

  private:
    bool assign(size_t k) {
        if (k == order_.size()) return realize_all();
        int pv = order_[k];
        int forced = anchor_of_[pv];
        for (int hv = (forced >= 0 ? forced : 0); hv < host_.vertex_count(); ++hv) {
            if (forced >= 0 && hv != forced) break;
            budget_.tick();
            if (role_[hv] >= 0) continue;
            if (host_.degree(hv) < pattern_.degree(pv)) continue;
            if (!canon_ok(pv, hv)) continue;
            img_[pv] = hv;
            role_[hv] = pv;
            bool ok = assign(k + 1);
            img_[pv] = -1;
            role_[hv] = -1;
            if (ok) return true;
        }
        return false;
    }

    // Cycle symmetry pruning: the first cycle vertex gets the least host image
    // among the cycle, and its successor gets a smaller image than its
    // predecessor. Any witness can be rotated/reflected into this form.
    bool canon_ok(int pv, int hv) const {
        if (canon_.empty()) return true;
        int pos = canon_pos_[pv];
        if (pos < 0) return true;
        int c0 = img_[canon_[0]];
        if (pos > 0 && c0 >= 0 && hv < c0) return false;
        if (pos == 0)
            for (int cv : canon_)
                if (cv != pv && img_[cv] >= 0 && img_[cv] < hv) return false;
        const size_t last = canon_.size() - 1;
        if (canon_.size() >= 3) {
            int s = img_[canon_[1]], p = img_[canon_[last]];
            if (pos == 1 && p >= 0 && hv > p) return false;
            if (pos == static_cast<int>(last) && s >= 0 && hv < s) return false;
        }
        return true;
    }

    int free_nbrs(int hv) const {
        int c = 0;
        for (int u : host_.neighbours(hv))
            if (role_[u] < 0 && !used_[u]) ++c;
        return c;
    }

    // Necessary condition: every branch image has enough usable incident
    // vertices for its unrealized pattern edges.
    bool slots_ok() const {
        for (int pv = 0; pv < pattern_.vertex_count(); ++pv) {
            int need = 0;
            for (size_t i = 0; i < pedges_.size(); ++i)
                if (!realized_[i] && pedges_[i].meets(pv)) ++need;
            if (need == 0) continue;
            int have = 0;
            for (int u : host_.neighbours(img_[pv])) {
                if (role_[u] < 0 && !used_[u]) ++have;
                else if (role_[u] >= 0) {
                    Edge want(pv, role_[u]);
                    for (size_t i = 0; i < pedges_.size(); ++i)
                        if (!realized_[i] && pedges_[i] == want) {
                            ++have;
                            break;
                        }
                }
                if (have >= need) break;
            }
            if (have < need) return false;
        }
        return true;
    }

    // Region check: each unrealized pattern edge needs a direct host edge or a
    // free component adjacent to both endpoint images.
    bool regions_ok() const {
        const int nh = host_.vertex_count();
        std::vector<int> comp(nh, -1);
        int nc = 0;
        std::vector<int> stack;
        for (int s = 0; s < nh; ++s) {
            if (comp[s] >= 0 || role_[s] >= 0 || used_[s]) continue;
            comp[s] = nc;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : host_.neighbours(v))
                    if (comp[u] < 0 && role_[u] < 0 && !used_[u]) {
                        comp[u] = nc;
                        stack.push_back(u);
                    }
            }
            ++nc;
        }
        std::vector<char> mark(nc, 0);
        for (size_t i = 0; i < pedges_.size(); ++i) {
            if (realized_[i]) continue;
            int a = img_[pedges_[i].a], b = img_[pedges_[i].b];
            if (host_.adjacent(a, b)) continue;
            std::fill(mark.begin(), mark.end(), 0);
            for (int u : host_.neighbours(a))
                if (role_[u] < 0 && !used_[u]) mark[comp[u]] = 1;
            bool ok = false;
            for (int u : host_.neighbours(b))
                if (role_[u] < 0 && !used_[u] && mark[comp[u]]) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    }

    bool realize_all() {
        budget_.tick();
        return realize(pedges_.size());
    }

    bool realize(size_t remaining) {
        budget_.tick();
        if (remaining == 0) {
            SubdivisionWitness w;
            w.branch_map = img_;
            w.pattern_edges = pedges_;
            w.paths = paths_;
            for (size_t i = 0; i < w.paths.size(); ++i)  // undo fail-first endpoint swaps
                if (w.paths[i].front() != img_[pedges_[i].a])
                    std::reverse(w.paths[i].begin(), w.paths[i].end());
            std::vector<std::pair<int, int>> anch;
            for (int pv = 0; pv < pattern_.vertex_count(); ++pv)
                if (anchor_of_[pv] >= 0) anch.push_back({pv, anchor_of_[pv]});
            if (!check_witness(host_, pattern_, w, anch))
                throw std::logic_error("subdivision search produced an invalid witness");
            witness_ = std::move(w);
            return true;
        }
        if (!slots_ok() || !regions_ok()) return false;
        // fail-first: realize the most constrained edge next
        size_t best = pedges_.size();
        long best_score = -1;
        for (size_t i = 0; i < pedges_.size(); ++i) {
            if (realized_[i]) continue;
            int a = img_[pedges_[i].a], b = img_[pedges_[i].b];
            long score = (host_.adjacent(a, b) ? 1 : 0) + std::min(free_nbrs(a), free_nbrs(b));
            if (best == pedges_.size() || score < best_score) {
                best = i;
                best_score = score;
            }
        }
        int a = img_[pedges_[best].a], b = img_[pedges_[best].b];
        if (free_nbrs(b) < free_nbrs(a) || (free_nbrs(b) == free_nbrs(a) && b < a)) std::swap(a, b);
        realized_[best] = 1;
        paths_[best].clear();
        paths_[best].push_back(a);
        bool ok = path_dfs(best, a, b, remaining);
        realized_[best] = 0;
        paths_[best].clear();
        return ok;
    }

    bool path_dfs(size_t ei, int cur, int target, size_t remaining) {
        for (int nb : host_.neighbours(cur)) {
            budget_.tick();
            if (nb == target) {
                paths_[ei].push_back(target);
                if (realize(remaining - 1)) return true;
                paths_[ei].pop_back();
                continue;
            }
            if (role_[nb] >= 0 || used_[nb]) continue;
            used_[nb] = 1;
            paths_[ei].push_back(nb);
            bool ok = path_dfs(ei, nb, target, remaining);
            paths_[ei].pop_back();
            used_[nb] = 0;
            if (ok) return true;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<int> canon_;
    Budget budget_;
    std::vector<int> img_, role_, order_, anchor_of_, canon_pos_;
    std::vector<char> used_;
    std::vector<Edge> pedges_;
    std::vector<char> realized_;
    std::vector<std::vector<int>> paths_;
    std::optional<SubdivisionWitness> witness_;
};

}  // namespace detail

// Exhaustive subdivision search. A definite `absent` is only reported after
// the full space is exhausted; a budget (node-expansion count) turns long
// searches into `exhausted` instead.
inline OracleResult contains_subdivision(const Graph& host, const Graph& pattern,
                                         const std::vector<std::pair<int, int>>& anchors = {},
                                         std::optional<uint64_t> budget = std::nullopt,
                                         const std::vector<int>& canon_cycle = {}) {
    if (pattern.vertex_count() == 0)
        throw std::invalid_argument("contains_subdivision: empty pattern");
    for (int v = 0; v < pattern.vertex_count(); ++v)
        if (pattern.degree(v) == 0)
            throw std::invalid_argument("contains_subdivision: pattern has an isolated vertex");
    detail::Budget b;
    if (budget) {
        b.limited = true;
        b.left = *budget;
    }
    if (pattern.vertex_count() > host.vertex_count()) return {SearchStatus::absent, std::nullopt};
    detail::SubdivSearch search(host, pattern, anchors, canon_cycle, b);
    return search.run();
}

// W_k: hub 0 adjacent to the rim cycle 1..k.
inline Graph wheel_graph(int k) {
    if (k < 3) throw std::invalid_argument("wheel_graph: k must be at least 3");
    std::vector<Edge> es;
    for (int i = 1; i <= k; ++i) {
        es.push_back(Edge(0, i));
        es.push_back(Edge(i, i == k ? 1 : i + 1));
    }
    return Graph(k + 1, es);
}

inline OracleResult contains_wheel(const Graph& host, int k,
                                   std::optional<int> centre = std::nullopt,
                                   std::optional<uint64_t> budget = std::nullopt) {
    if (k < 3) throw std::invalid_argument("contains_wheel: k must be at least 3");
    if (centre && (*centre < 0 || *centre >= host.vertex_count()))
        throw std::invalid_argument("contains_wheel: centre out of range");
    Graph pattern = wheel_graph(k);
    std::vector<std::pair<int, int>> anchors;
    if (centre) anchors.push_back({0, *centre});
    std::vector<int> rim(k);
    std::iota(rim.begin(), rim.end(), 1);
    return contains_subdivision(host, pattern, anchors, budget, rim);
}

// Does bridge Y contain a subdivision of bridge X anchored at S (vertices of
// X∩S fixed pointwise)? Both sides taken as induced subgraphs of g.
inline bool bridge_contains_subdivision_of(const Graph& g, const Bridge& y, const Bridge& x,
                                           const std::vector<int>& s) {
    std::vector<int> s_sorted(s);
    std::sort(s_sorted.begin(), s_sorted.end());
    std::vector<int> x_anchor = sorted_intersection(x.vertices, s_sorted);
    if (static_cast<int>(x.vertices.size() - x_anchor.size()) > 3)
        throw std::invalid_argument("bridge_contains_subdivision_of: |X \\ S| exceeds 3");
    for (int v : x_anchor)
        if (!y.contains(v)) return false;
    auto [pat, pmap] = induced_subgraph(g, x.vertices);
    auto [hst, hmap] = induced_subgraph(g, y.vertices);
    std::vector<std::pair<int, int>> anchors;
    for (int v : x_anchor) anchors.push_back({pmap[v], hmap[v]});
    return contains_subdivision(hst, pat, anchors).found();
}

}  // namespace wheelsub
