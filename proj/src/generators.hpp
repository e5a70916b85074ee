#ifndef JOINTS_GENERATORS_HPP
#define JOINTS_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <variant>

#include <gmpxx.h>

#include "graph.hpp"

namespace joints {

// Seedable deterministic generator: splitmix64 seeding into xoshiro256**.
// The stream is fixed for the lifetime of the project version; determinism
// is part of the generator contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Derive an independent stream for subtask `index` (sweep trials, restarts).
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

private:
    std::uint64_t state_[4];
};

struct GnpModel {
    mpq_class p;  // in [0,1]
};
struct GnmModel {
    std::uint64_t m;
};

struct RandomSpec {
    std::uint64_t seed = 0;
    std::variant<GnpModel, GnmModel> model;
};

PartSizes turan_part_sizes(int n, int r);
Graph turan(int n, int r);
Graph turan_plus_edge(int n, int r);
Graph complete_multipartite(const PartSizes& parts);
Graph complete_graph(int n);

Graph random_graph(int n, const RandomSpec& spec);

inline constexpr int kMaxExhaustiveOrder = 7;

std::uint64_t labeled_graph_count(int n);          // 2^(n(n-1)/2)
Graph graph_from_edge_mask(int n, std::uint64_t mask);
// Yields all labeled graphs of order n in edge-mask order. Throws for n > 7.
void all_labeled_graphs(int n, const std::function<void(std::uint64_t mask, const Graph&)>& fn);

}  // namespace joints

#endif
