#ifndef JOINTS_CLIQUES_HPP
#define JOINTS_CLIQUES_HPP

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "graph.hpp"

namespace joints {

// k_0..k_omega; counts beyond the clique number are absent.
struct CliqueVector {
    std::vector<mpz_class> counts;

    int omega() const { return static_cast<int>(counts.size()) - 1; }
    mpz_class k(int s) const {
        if (s < 0 || s > omega()) return 0;
        return counts[static_cast<std::size_t>(s)];
    }
    bool operator==(const CliqueVector&) const = default;
};

// Maximum r-joint: the edge whose common neighborhood carries the most
// (r-2)-cliques, with the exact count. No edge when the graph is r-clique-free.
struct JointWitness {
    int order = 0;
    mpz_class size = 0;
    std::optional<std::pair<int, int>> edge;  // u < v, lexicographically smallest among maxima
};

// Exact number of r-cliques. Recursion over a degeneracy ordering with
// word-parallel candidate intersection; exact regardless of thread count.
mpz_class count_cliques(const Graph& g, int r, unsigned threads = 1);

CliqueVector clique_vector(const Graph& g);

// Number of r-cliques containing the edge {u,v}. Throws on a non-edge.
mpz_class edge_clique_count(const Graph& g, int u, int v, int r);

// js_r(G) with witness edge. Throws for r < 3 (a 2-joint is a single edge;
// js_2 is left undefined, see README).
JointWitness joint_size(const Graph& g, int r, unsigned threads = 1);

// Degeneracy ordering (repeatedly remove a minimum-degree vertex).
std::vector<int> degeneracy_order(const Graph& g);

}  // namespace joints

#endif
