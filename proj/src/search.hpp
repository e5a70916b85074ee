#ifndef JOINTS_SEARCH_HPP
#define JOINTS_SEARCH_HPP

#include <cstdint>

#include "reports.hpp"
#include "graph.hpp"

namespace joints {

struct ProbeConfig {
    int n = 0;
    int r = 0;
    int s = 0;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    unsigned restarts = 1;
    unsigned threads = 1;  // restarts run in parallel; each restart is sequential

    // When set, receives the incumbent-js trace of the winning restart
    // (nonincreasing by construction).
    std::vector<mpz_class>* best_log = nullptr;
};

// Simulated annealing over single-edge toggles, starting from T_r(n) plus
// one edge, minimizing js_{r+1}(G) subject to k_s(G) >= k_s(T_r(n)) and
// G not isomorphic to T_r(n). Deterministic given (config, seed).
ProbeResult probe_extremal(const ProbeConfig& config);

// Re-runs the constraint and objective checks on a reported result with
// fresh engine calls; throws std::runtime_error on any mismatch.
void validate_probe_result(const ProbeResult& result);

}  // namespace joints

#endif
