#include <catch2/catch_amalgamated.hpp>

#include "wheelsub/connectivity.hpp"
#include "wheelsub/families.hpp"

using namespace wheelsub;

namespace {

// brute-force reference: does removing {a,b} disconnect g?
bool pair_separates(const Graph& g, int a, int b) {
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != a && v != b) rest.push_back(v);
    if (rest.empty()) return false;
    auto [h, map] = induced_subgraph(g, rest);
    return components(h).size() > 1;
}

}  // namespace

TEST_CASE("components") {
    Graph two(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4)});
    auto cs = components(two);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == std::vector<int>{0, 1, 2});
    CHECK(cs[1] == std::vector<int>{3, 4});
    CHECK(cs[2] == std::vector<int>{5});
    CHECK(components(Graph(0)).empty());
    CHECK(is_connected(cycle_graph(5)));
    CHECK_FALSE(is_connected(two));
}

TEST_CASE("blocks and articulation vertices") {
    // bowtie: triangles 0-1-2 and 2-3-4 sharing vertex 2
    Graph bowtie(5, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(2, 3), Edge(3, 4), Edge(2, 4)});
    CHECK(articulation_vertices(bowtie) == std::vector<int>{2});
    auto bl = blocks(bowtie);
    REQUIRE(bl.size() == 2);
    CHECK(bl[0] == std::vector<int>{0, 1, 2});
    CHECK(bl[1] == std::vector<int>{2, 3, 4});

    CHECK(blocks(cycle_graph(5)).size() == 1);
    CHECK(blocks(path_graph(4)).size() == 3);  // each edge is a block
    CHECK(blocks(Graph(1)).size() == 1);
    CHECK_THROWS_AS(blocks(Graph(3, {Edge(0, 1)})), std::invalid_argument);
}

TEST_CASE("find_2_separator basics") {
    CHECK(find_2_separator(cycle_graph(5)) == std::make_pair(0, 2));
    CHECK_FALSE(find_2_separator(complete_graph(4)).has_value());
    CHECK_FALSE(find_2_separator(wheel_graph(7)).has_value());
    CHECK(find_2_separator(complete_bipartite_graph(2, 3)) == std::make_pair(0, 1));
    CHECK_THROWS_AS(find_2_separator(complete_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(find_2_separator(Graph(5, {Edge(0, 1), Edge(2, 3)})), std::invalid_argument);
}

TEST_CASE("is_3_connected basics") {
    CHECK(is_3_connected(complete_graph(4)));
    CHECK(is_3_connected(wheel_graph(7)));
    CHECK(is_3_connected(complete_bipartite_graph(3, 3)));
    CHECK_FALSE(is_3_connected(cycle_graph(6)));
    CHECK_FALSE(is_3_connected(complete_graph(3)));  // too small
    // two K4s sharing an edge: {0,1} is a 2-separator
    Graph shared(6, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3),
                     Edge(0, 4), Edge(0, 5), Edge(1, 4), Edge(1, 5), Edge(4, 5)});
    CHECK_FALSE(is_3_connected(shared));
    CHECK(find_2_separator(shared) == std::make_pair(0, 1));
}

TEST_CASE("2-separator agrees with brute force") {
    std::mt19937_64 rng(424242);
    int tested = 0;
    for (int iter = 0; iter < 400; ++iter) {
        int n = 4 + rnd::below(rng, 9);
        Graph g = random_gnp(n, 0.25 + 0.5 * rnd::unit(rng), rng());
        if (!is_connected(g) || !articulation_vertices(g).empty()) continue;
        ++tested;
        std::optional<std::pair<int, int>> best;
        for (int a = 0; a < n && !best; ++a)
            for (int b = a + 1; b < n && !best; ++b)
                if (pair_separates(g, a, b)) best = {a, b};
        CHECK(find_2_separator(g) == best);
        CHECK(is_3_connected(g) == (n >= 4 && !best.has_value()));
    }
    CHECK(tested > 100);
}

TEST_CASE("blocks cover every edge exactly once") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + rnd::below(rng, 14);
        Graph g = random_gnp(n, 0.3, rng());
        if (!is_connected(g)) continue;
        auto bl = blocks(g);
        size_t covered = 0;
        for (const Edge& e : g.edges()) {
            int hits = 0;
            for (const auto& b : bl)
                if (sorted_contains(b, e.a) && sorted_contains(b, e.b)) ++hits;
            // an edge inside exactly one block; shared vertices never carry shared edges
            CHECK(hits == 1);
            covered += hits;
        }
        CHECK(covered == static_cast<size_t>(g.edge_count()));
    }
}
