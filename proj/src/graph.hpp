#ifndef JOINTS_GRAPH_HPP
#define JOINTS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace joints {

// Simple undirected graph on vertices 0..n-1, adjacency stored as a
// bit matrix with word-padded rows so neighborhood intersections run
// word-parallel. Immutable by convention once built; the mutators exist
// for construction and for the local-search module, which owns its copy.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws std::invalid_argument on out-of-range endpoints or loops.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    std::uint64_t edge_count() const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::uint64_t* mut_row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void check_pair(int u, int v) const;

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Part sizes of a complete multipartite graph, nonincreasing.
struct PartSizes {
    std::vector<int> sizes;

    int parts() const { return static_cast<int>(sizes.size()); }
    int total() const;
    bool balanced() const;  // max - min <= 1

    bool operator==(const PartSizes&) const = default;
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Gamma(u) /\ Gamma(v), excluding u and v. Throws on u == v.
std::vector<int> common_neighborhood(const Graph& g, int u, int v);

// Word mask variant used on hot paths; out must hold g.words_per_row() words.
void common_neighborhood_mask(const Graph& g, int u, int v, std::uint64_t* out);

// Part sizes iff G is complete multipartite (every component of the
// complement is a clique), nonincreasing; empty otherwise.
std::optional<PartSizes> complete_multipartite_decomposition(const Graph& g);

// True iff G is isomorphic to T_r(n). For n < r this accepts K_n.
bool is_turan(const Graph& g, int r);

}  // namespace joints

#endif
