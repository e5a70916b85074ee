#include <doctest.h>

#include "generators.hpp"
#include "graph.hpp"

using namespace joints;

namespace {

// Independent oracle: non-adjacency (including equality) is transitive
// exactly when G is complete multipartite.
bool nonadjacency_transitive(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                if (!g.has_edge(a, b) && !g.has_edge(b, c) && g.has_edge(a, c)) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("build_graph basics") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 2));

    const Graph empty4 = Graph::from_edges(4, {});
    CHECK(empty4.order() == 4);
    CHECK(empty4.edge_count() == 0);

    const Graph dup = Graph::from_edges(2, {{0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("build_graph rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("adjacency invariants hold on construction") {
    const Graph g = Graph::from_edges(5, {{0, 1}, {2, 4}, {1, 3}});
    for (int u = 0; u < 5; ++u) {
        CHECK_FALSE(g.has_edge(u, u));
        for (int v = 0; v < 5; ++v)
            if (u != v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    CHECK(complement(Graph(3)).edge_count() == 3);

    const Graph path4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(complement(complement(path4)) == path4);
}

TEST_CASE("complement is an involution, exhaustive n <= 5") {
    for (int n = 0; n <= 5; ++n)
        all_labeled_graphs(n, [](std::uint64_t, const Graph& g) {
            CHECK(complement(complement(g)) == g);
        });
}

TEST_CASE("complement involution on random graphs up to n = 8") {
    for (int n = 6; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            RandomSpec spec{seed, GnpModel{mpq_class(1, 2)}};
            const Graph g = random_graph(n, spec);
            CHECK(complement(complement(g)) == g);
        }
}

TEST_CASE("induced_subgraph") {
    CHECK(induced_subgraph(complete_graph(5), {0, 1, 2}) == complete_graph(3));
    CHECK(induced_subgraph(complete_graph(5), {}).order() == 0);

    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const Graph sub = induced_subgraph(c5, {0, 1, 2});
    CHECK(sub.order() == 3);
    CHECK(sub.edge_count() == 2);

    CHECK_THROWS_AS(induced_subgraph(c5, {7}), std::invalid_argument);
}

TEST_CASE("common_neighborhood") {
    CHECK(common_neighborhood(complete_graph(5), 0, 1) == std::vector<int>{2, 3, 4});

    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(common_neighborhood(c5, 0, 1).empty());
    CHECK_THROWS_AS(common_neighborhood(c5, 2, 2), std::invalid_argument);
}

TEST_CASE("common_neighborhood across Turan parts is the remaining part") {
    const Graph t39 = turan(9, 3);
    // vertices 0 and 3 lie in different parts (blocks of size 3)
    const auto common = common_neighborhood(t39, 0, 3);
    CHECK(common.size() == 3);
    for (int v : common) CHECK(v >= 6);
}

TEST_CASE("complete_multipartite_decomposition") {
    auto t310 = complete_multipartite_decomposition(turan(10, 3));
    REQUIRE(t310.has_value());
    CHECK(t310->sizes == std::vector<int>{4, 3, 3});

    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto k22 = complete_multipartite_decomposition(c4);
    REQUIRE(k22.has_value());
    CHECK(k22->sizes == std::vector<int>{2, 2});

    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_FALSE(complete_multipartite_decomposition(c5).has_value());
}

TEST_CASE("decomposition agrees with the transitivity oracle") {
    for (int n = 0; n <= 5; ++n)
        all_labeled_graphs(n, [](std::uint64_t, const Graph& g) {
            CHECK(complete_multipartite_decomposition(g).has_value() == nonadjacency_transitive(g));
        });
    for (int n = 6; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            RandomSpec spec{seed, GnpModel{mpq_class(3, 4)}};
            const Graph g = random_graph(n, spec);
            CHECK(complete_multipartite_decomposition(g).has_value() == nonadjacency_transitive(g));
        }
}

TEST_CASE("is_turan") {
    CHECK(is_turan(turan(9, 3), 3));

    Graph spoiled = turan(9, 3);
    spoiled.add_edge(0, 1);  // intra-part edge of the first block
    CHECK_FALSE(is_turan(spoiled, 3));

    CHECK_FALSE(is_turan(complete_multipartite(PartSizes{{5, 4, 1}}), 3));

    for (int n = 1; n <= 40; ++n)
        for (int r = 1; r <= n; ++r) CHECK(is_turan(turan(n, r), r));
}

TEST_CASE("is_turan accepts K_n when n < r") {
    CHECK(is_turan(complete_graph(4), 7));
    CHECK(is_turan(turan(5, 7), 7));
    CHECK(is_turan(Graph(0), 3));
}
