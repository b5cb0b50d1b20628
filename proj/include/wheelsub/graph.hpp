#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wheelsub {

// Unordered pair of distinct vertices, stored smaller-first.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
        if (u == v) throw std::invalid_argument("Edge: self-loop " + std::to_string(u));
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;

    bool meets(int v) const { return a == v || b == v; }
    int other(int v) const { return v == a ? b : a; }
    bool shares_endpoint(const Edge& o) const { return meets(o.a) || meets(o.b); }
};

// Simple undirected graph on vertices 0..n-1, sorted adjacency lists.
// Treated as an immutable value: all mutating operations return new graphs.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.resize(n);
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const Edge& e : edges) add_edge_internal(e.a, e.b);
        finish();
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    std::span<const int> neighbours(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.size()));
        return d;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    bool has_edge(const Edge& e) const { return adjacent(e.a, e.b); }

    // All edges, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.push_back(Edge(u, v));
        return out;
    }

    std::vector<int> degree_sequence() const {  // descending
        std::vector<int> d;
        d.reserve(adj_.size());
        for (const auto& row : adj_) d.push_back(static_cast<int>(row.size()));
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    friend bool operator==(const Graph& x, const Graph& y) { return x.adj_ == y.adj_; }

  private:
    friend struct GraphBuilder;

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
    }

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    void finish() {
        m_ = 0;
        for (auto& row : adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            m_ += static_cast<int>(row.size());
        }
        m_ /= 2;
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Result of an editing operation: the new graph plus the relabelling.
// old_to_new[v] == -1 for removed vertices.
struct EditResult {
    Graph graph;
    std::vector<int> old_to_new;
};

// Delete vertices and edges, then add edges, compacting vertex ids.
// Added edges must join distinct surviving vertices; removals must exist.
inline EditResult edit(const Graph& g, const std::vector<int>& remove_vertices,
                       const std::vector<Edge>& remove_edges,
                       const std::vector<Edge>& add_edges) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : remove_vertices) {
        if (v < 0 || v >= n) throw std::invalid_argument("edit: removed vertex out of range");
        gone[v] = 1;
    }
    for (const Edge& e : remove_edges) {
        if (!g.has_edge(e))
            throw std::invalid_argument("edit: removed edge {" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + "} not present");
    }
    std::vector<int> old_to_new(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) old_to_new[v] = next++;

    std::vector<Edge> kept;
    kept.reserve(g.edge_count() + add_edges.size());
    std::vector<Edge> dropped(remove_edges);
    std::sort(dropped.begin(), dropped.end());
    for (const Edge& e : g.edges()) {
        if (gone[e.a] || gone[e.b]) continue;
        if (std::binary_search(dropped.begin(), dropped.end(), e)) continue;
        kept.push_back(Edge(old_to_new[e.a], old_to_new[e.b]));
    }
    for (const Edge& e : add_edges) {
        if (e.a < 0 || e.b >= n || gone[e.a] || gone[e.b])
            throw std::invalid_argument("edit: added edge touches a missing vertex");
        kept.push_back(Edge(old_to_new[e.a], old_to_new[e.b]));
    }
    return {Graph(next, kept), std::move(old_to_new)};
}

// Induced subgraph on the given vertex set (need not be sorted; duplicates rejected).
inline EditResult induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    const int n = g.vertex_count();
    std::vector<int> old_to_new(n, -1);
    std::vector<int> sorted(vertices);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
    int next = 0;
    for (int v : sorted) {
        if (v < 0 || v >= n) throw std::invalid_argument("induced_subgraph: vertex out of range");
        old_to_new[v] = next++;
    }
    std::vector<Edge> kept;
    for (int v : sorted)
        for (int w : g.neighbours(v))
            if (v < w && old_to_new[w] >= 0) kept.push_back(Edge(old_to_new[v], old_to_new[w]));
    return {Graph(next, kept), std::move(old_to_new)};
}

// A bridge of G|W: one connected component C of G-W together with its
// attachments (vertices of W adjacent to C). W-W edges are never bridges here;
// query adjacency on g directly for those.
struct Bridge {
    std::vector<int> vertices;     // C union attachments, sorted
    std::vector<int> attachments;  // subset of W, sorted

    std::vector<int> interior() const {  // C itself
        std::vector<int> out;
        std::set_difference(vertices.begin(), vertices.end(), attachments.begin(),
                            attachments.end(), std::back_inserter(out));
        return out;
    }
    bool attaches(int v) const {
        return std::binary_search(attachments.begin(), attachments.end(), v);
    }
    bool contains(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
};

inline std::vector<Bridge> bridges_of(const Graph& g, const std::vector<int>& w) {
    const int n = g.vertex_count();
    std::vector<char> in_w(n, 0);
    for (int v : w) {
        if (v < 0 || v >= n) throw std::invalid_argument("bridges_of: vertex out of range");
        in_w[v] = 1;
    }
    std::vector<int> comp(n, -1);
    std::vector<Bridge> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (in_w[s] || comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        Bridge b;
        stack.push_back(s);
        comp[s] = id;
        std::vector<char> attached(n, 0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            b.vertices.push_back(v);
            for (int u : g.neighbours(v)) {
                if (in_w[u]) {
                    if (!attached[u]) {
                        attached[u] = 1;
                        b.attachments.push_back(u);
                    }
                } else if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(b.attachments.begin(), b.attachments.end());
        b.vertices.insert(b.vertices.end(), b.attachments.begin(), b.attachments.end());
        std::sort(b.vertices.begin(), b.vertices.end());
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [](const Bridge& x, const Bridge& y) { return x.vertices < y.vertices; });
    return out;
}

// --- small sorted-vector helpers shared across modules ---

inline bool sorted_contains(const std::vector<int>& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

inline std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace wheelsub
