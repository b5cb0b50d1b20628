#pragma once

#include <functional>
#include <optional>

#include "graph.hpp"

namespace wheelsub {

inline std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u : g.neighbours(v))
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

namespace detail {

// Iterative Tarjan lowpoint DFS; reports articulation vertices and biconnected
// components (as vertex sets) via the edge stack.
struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<char> is_art;
    std::vector<Edge> estack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockDfs(const Graph& g)
        : g(g), disc(g.vertex_count(), -1), low(g.vertex_count(), 0),
          parent(g.vertex_count(), -1), is_art(g.vertex_count(), 0) {}

    void pop_block(const Edge& until) {
        std::vector<int> verts;
        for (;;) {
            Edge e = estack.back();
            estack.pop_back();
            verts.push_back(e.a);
            verts.push_back(e.b);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    }

    void run(int root) {
        struct Frame {
            int v;
            size_t i;
        };
        std::vector<Frame> st{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!st.empty()) {
            auto& [v, i] = st.back();
            auto nbrs = g.neighbours(v);
            if (i < nbrs.size()) {
                int u = nbrs[i++];
                if (u == parent[v]) continue;
                if (disc[u] < 0) {
                    parent[u] = v;
                    estack.push_back(Edge(v, u));
                    disc[u] = low[u] = timer++;
                    if (v == root) ++root_children;
                    st.push_back({u, 0});
                } else if (disc[u] < disc[v]) {
                    estack.push_back(Edge(v, u));
                    low[v] = std::min(low[v], disc[u]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != root) is_art[p] = 1;
                        pop_block(Edge(p, v));
                    }
                }
            }
        }
        if (root_children >= 2) is_art[root] = 1;
        if (g.degree(root) == 0) blocks.push_back({root});  // isolated vertex
    }
};

inline BlockDfs run_block_dfs(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs.disc[v] < 0) dfs.run(v);
    return dfs;
}

}  // namespace detail

inline std::vector<int> articulation_vertices(const Graph& g) {
    auto dfs = detail::run_block_dfs(g);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs.is_art[v]) out.push_back(v);
    return out;
}

// Biconnected components of a connected graph, as vertex sets.
inline std::vector<std::vector<int>> blocks(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph is disconnected");
    auto dfs = detail::run_block_dfs(g);
    std::sort(dfs.blocks.begin(), dfs.blocks.end());
    return dfs.blocks;
}

// Lexicographically least pair {a,b}, a<b, whose removal disconnects g.
// Scans a ascending and takes the least articulation vertex of g-a; the first
// hit is the overall lexicographic minimum since separating pairs are
// symmetric (b is an articulation vertex of g-a iff {a,b} separates).
inline std::optional<std::pair<int, int>> find_2_separator(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4) throw std::invalid_argument("find_2_separator: need at least 4 vertices");
    if (!is_connected(g)) throw std::invalid_argument("find_2_separator: graph is disconnected");
    if (!articulation_vertices(g).empty())
        throw std::invalid_argument("find_2_separator: graph has a cut vertex");
    for (int a = 0; a < n; ++a) {
        std::vector<int> rest;
        rest.reserve(n - 1);
        for (int v = 0; v < n; ++v)
            if (v != a) rest.push_back(v);
        auto [h, map] = induced_subgraph(g, rest);
        auto arts = articulation_vertices(h);
        if (!arts.empty()) {
            // map back: vertex ids in h are g's ids with a removed
            int b = arts.front() < a ? arts.front() : arts.front() + 1;
            return std::make_pair(std::min(a, b), std::max(a, b));
        }
    }
    return std::nullopt;
}

inline bool is_3_connected(const Graph& g) {
    if (g.vertex_count() < 4) return false;
    if (!is_connected(g)) return false;
    if (!articulation_vertices(g).empty()) return false;
    return !find_2_separator(g).has_value();
}

}  // namespace wheelsub
