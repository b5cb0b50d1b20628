#pragma once

#include <cstdint>
#include <random>
#include <set>

#include "graph.hpp"
#include "subdivision.hpp"

namespace wheelsub {

// Deterministic helpers on top of the (fully specified) mt19937_64 stream, so
// generated instances are reproducible across platforms.
namespace rnd {

inline double unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

inline int below(std::mt19937_64& rng, int n) {
    uint64_t lim = UINT64_MAX - UINT64_MAX % static_cast<uint64_t>(n);
    uint64_t x;
    do {
        x = rng();
    } while (x >= lim);
    return static_cast<int>(x % static_cast<uint64_t>(n));
}

template <class T>
void shuffle(std::vector<T>& xs, std::mt19937_64& rng) {
    for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i)
        std::swap(xs[i], xs[below(rng, i + 1)]);
}

}  // namespace rnd

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back(Edge(i, j));
    return Graph(n, es);
}

inline Graph complete_bipartite_graph(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back(Edge(i, a + j));
    return Graph(a + b, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(Edge(i, (i + 1) % n));
    return Graph(n, es);
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back(Edge(i, i + 1));
    return Graph(n, es);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(Edge(i, (i + 1) % 5));
        es.push_back(Edge(i, i + 5));
        es.push_back(Edge(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, es);
}

inline Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: empty grid");
    std::vector<Edge> es;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.push_back(Edge(id(r, c), id(r, c + 1)));
            if (r + 1 < rows) es.push_back(Edge(id(r, c), id(r + 1, c)));
        }
    return Graph(rows * cols, es);
}

inline Graph random_gnp(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rnd::unit(rng) < p) es.push_back(Edge(i, j));
    return Graph(n, es);
}

// Pairing model, matching suitable stub pairs one at a time and restarting
// only when no suitable pair remains. Whole-sample rejection would succeed
// with probability about exp(-(d*d-1)/4) — hopeless already at d = 7.
inline Graph random_regular(int n, int d, uint64_t seed) {
    if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: invalid (n, d)");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::set<Edge> es;
        auto suitable = [&](size_t i, size_t j) {
            return stubs[i] != stubs[j] && !es.count(Edge(stubs[i], stubs[j]));
        };
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            size_t i = 0, j = 0;
            int tries = 0;
            do {
                i = rnd::below(rng, static_cast<int>(stubs.size()));
                j = rnd::below(rng, static_cast<int>(stubs.size()));
            } while ((i == j || !suitable(i, j)) && ++tries < 200);
            if (i == j || !suitable(i, j)) {
                stuck = true;  // tail has no suitable pair w.h.p.; resample
                for (size_t a = 0; a + 1 < stubs.size() && stuck; ++a)
                    for (size_t b = a + 1; b < stubs.size() && stuck; ++b)
                        if (suitable(a, b)) { i = a; j = b; stuck = false; }
                if (stuck) break;
            }
            es.insert(Edge(stubs[i], stubs[j]));
            if (i < j) std::swap(i, j);  // erase the larger index first
            stubs.erase(stubs.begin() + static_cast<long>(i));
            stubs.erase(stubs.begin() + static_cast<long>(j));
        }
        if (!stuck) return Graph(n, std::vector<Edge>(es.begin(), es.end()));
    }
    throw std::runtime_error("random_regular: sampling failed");
}

enum class Family {
    wheel,
    complete,
    complete_bipartite,
    cycle,
    path,
    petersen,
    grid,
    random_gnp,
    random_regular,
};

struct FamilySpec {
    Family family;
    int a = 0;           // primary size (k, n, rows, ...)
    int b = 0;           // secondary size (bipartite part, cols, degree)
    double p = 0.0;      // gnp edge probability
    uint64_t seed = 0;   // random families
};

inline Graph make_family(const FamilySpec& f) {
    switch (f.family) {
        case Family::wheel: return wheel_graph(f.a);
        case Family::complete: return complete_graph(f.a);
        case Family::complete_bipartite: return complete_bipartite_graph(f.a, f.b);
        case Family::cycle: return cycle_graph(f.a);
        case Family::path: return path_graph(f.a);
        case Family::petersen: return petersen_graph();
        case Family::grid: return grid_graph(f.a, f.b);
        case Family::random_gnp: return random_gnp(f.a, f.p, f.seed);
        case Family::random_regular: return random_regular(f.a, f.b, f.seed);
    }
    throw std::invalid_argument("make_family: unknown family");
}

}  // namespace wheelsub
