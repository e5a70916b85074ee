#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cliques.hpp"
#include "generators.hpp"
#include "turan_algebra.hpp"

using namespace joints;

namespace {

// Independent oracle: enumerate all r-subsets and test pairwise adjacency.
mpz_class naive_count(const Graph& g, int r) {
    const int n = g.order();
    if (r == 0) return 1;
    if (r > n) return 0;
    std::vector<int> pick(static_cast<std::size_t>(r));
    mpz_class total = 0;
    auto rec = [&](auto&& self, int depth, int from) -> void {
        if (depth == r) {
            ++total;
            return;
        }
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int i = 0; i < depth; ++i)
                if (!g.has_edge(pick[static_cast<std::size_t>(i)], v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                pick[static_cast<std::size_t>(depth)] = v;
                self(self, depth + 1, v + 1);
            }
        }
    };
    rec(rec, 0, 0);
    return total;
}

mpz_class naive_joint(const Graph& g, int r) {
    mpz_class best = 0;
    for (const auto& [u, v] : g.edges()) best = std::max(best, edge_clique_count(g, u, v, r));
    return best;
}

}  // namespace

TEST_CASE("count_cliques basics") {
    CHECK(count_cliques(complete_graph(5), 3) == 10);
    CHECK(count_cliques(turan(9, 3), 3) == 27);
    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(count_cliques(c5, 3) == 0);
    CHECK(count_cliques(c5, 0) == 1);
    CHECK(count_cliques(c5, 1) == 5);
    CHECK(count_cliques(c5, 2) == 5);
    CHECK(count_cliques(c5, 6) == 0);
    CHECK_THROWS_AS(count_cliques(c5, -1), std::invalid_argument);
}

TEST_CASE("count_cliques matches the subset oracle, exhaustive n <= 6") {
    for (int n = 0; n <= 6; ++n)
        all_labeled_graphs(n, [n](std::uint64_t, const Graph& g) {
            for (int r = 0; r <= n; ++r) CHECK(count_cliques(g, r) == naive_count(g, r));
        });
}

TEST_CASE("count_cliques matches the subset oracle on 1000 random graphs n <= 10") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int n = 5 + static_cast<int>(seed % 6);
        const Graph g = random_graph(n, RandomSpec{seed, GnpModel{mpq_class(1, 2)}});
        for (int r = 2; r <= n; ++r) CHECK(count_cliques(g, r) == naive_count(g, r));
    }
}

TEST_CASE("clique_vector") {
    CHECK(clique_vector(complete_graph(4)).counts ==
          std::vector<mpz_class>{1, 4, 6, 4, 1});
    Graph k4e = complete_graph(4);
    k4e.remove_edge(2, 3);
    CHECK(clique_vector(k4e).counts == std::vector<mpz_class>{1, 4, 5, 2});
    CHECK(clique_vector(Graph(3)).counts == std::vector<mpz_class>{1, 3});
    CHECK(clique_vector(Graph(0)).counts == std::vector<mpz_class>{1});
}

TEST_CASE("clique_vector agrees with count_cliques per order") {
    for (int n = 0; n <= 6; ++n)
        all_labeled_graphs(n, [n](std::uint64_t, const Graph& g) {
            const CliqueVector kv = clique_vector(g);
            for (int r = 0; r <= n + 1; ++r) CHECK(kv.k(r) == count_cliques(g, r));
            if (kv.omega() >= 1) CHECK(kv.k(kv.omega()) >= 1);
        });
}

TEST_CASE("edge_clique_count") {
    CHECK(edge_clique_count(complete_graph(6), 0, 1, 3) == 4);
    CHECK(edge_clique_count(turan(9, 3), 0, 3, 3) == 3);
    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(edge_clique_count(c5, 0, 1, 3) == 0);
    CHECK(edge_clique_count(c5, 0, 1, 2) == 1);
    CHECK_THROWS_AS(edge_clique_count(c5, 0, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(edge_clique_count(c5, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("edge_clique_count equals the induced-subgraph count") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = random_graph(9, RandomSpec{seed, GnpModel{mpq_class(3, 5)}});
        for (const auto& [u, v] : g.edges())
            for (int r = 2; r <= 6; ++r)
                CHECK(edge_clique_count(g, u, v, r) ==
                      count_cliques(induced_subgraph(g, common_neighborhood(g, u, v)), r - 2));
    }
}

TEST_CASE("joint_size closed-form instances") {
    const JointWitness k10 = joint_size(complete_graph(10), 4);
    CHECK(k10.size == 28);
    REQUIRE(k10.edge.has_value());
    CHECK(*k10.edge == std::pair<int, int>{0, 1});

    const JointWitness plus = joint_size(turan_plus_edge(9, 3), 4);
    CHECK(plus.size == 9);
    REQUIRE(plus.edge.has_value());
    CHECK(*plus.edge == std::pair<int, int>{0, 1});

    const JointWitness t39 = joint_size(turan(9, 3), 4);
    CHECK(t39.size == 0);
    CHECK_FALSE(t39.edge.has_value());

    CHECK_THROWS_AS(joint_size(complete_graph(5), 2), std::invalid_argument);
}

TEST_CASE("joint_size equals the max over edge_clique_count") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 6 + static_cast<int>(seed % 5);
        const Graph g = random_graph(n, RandomSpec{seed, GnpModel{mpq_class(1, 2)}});
        for (int r = 3; r <= 5; ++r) {
            const JointWitness w = joint_size(g, r);
            CHECK(w.size == naive_joint(g, r));
            if (w.edge) CHECK(edge_clique_count(g, w.edge->first, w.edge->second, r) == w.size);
        }
    }
}

TEST_CASE("adding an edge never decreases counts or joint size") {
    Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(4));
        Graph g = random_graph(n, RandomSpec{rng.next(), GnpModel{mpq_class(2, 5)}});
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (v >= u) ++v;
        if (g.has_edge(u, v)) g.remove_edge(u, v);
        Graph bigger = g;
        bigger.add_edge(u, v);
        for (int r = 3; r <= 5; ++r) {
            CHECK(count_cliques(bigger, r) >= count_cliques(g, r));
            CHECK(joint_size(bigger, r).size >= joint_size(g, r).size);
        }
    }
}

TEST_CASE("counts on Turan graphs match the symmetric-polynomial formula") {
    for (int r = 2; r <= 8; ++r)
        for (int n : {r, r + 1, 2 * r + 1, 30, 60})
            for (int s = 2; s <= r; ++s)
                CHECK(count_cliques(turan(n, r), s) ==
                      multipartite_clique_count(turan_part_sizes(n, r), s));
}

TEST_CASE("counting step of the joints argument: C(r+1,2) k_{r+1} <= js_{r+1} k_2") {
    for (int n = 2; n <= 6; ++n)
        all_labeled_graphs(n, [n](std::uint64_t, const Graph& g) {
            const CliqueVector kv = clique_vector(g);
            for (int r = 2; r < n; ++r) {
                const mpz_class lhs = binomial(r + 1, 2) * kv.k(r + 1);
                const mpz_class rhs = joint_size(g, r + 1).size * kv.k(2);
                CHECK(lhs <= rhs);
            }
        });
}

TEST_CASE("thread count does not change results") {
    const Graph t = turan(40, 4);
    const Graph g = random_graph(30, RandomSpec{9, GnpModel{mpq_class(1, 2)}});
    for (unsigned threads : {2u, 4u, 7u}) {
        CHECK(count_cliques(t, 4, threads) == count_cliques(t, 4, 1));
        CHECK(count_cliques(g, 5, threads) == count_cliques(g, 5, 1));
        const JointWitness one = joint_size(g, 4, 1);
        const JointWitness many = joint_size(g, 4, threads);
        CHECK(one.size == many.size);
        CHECK(one.edge == many.edge);
    }
}

TEST_CASE("degeneracy_order is a permutation with the removal property") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_graph(12, RandomSpec{seed, GnpModel{mpq_class(1, 3)}});
        const auto order = degeneracy_order(g);
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < 12; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
    }
}
