#ifndef JOINTS_VERIFIER_HPP
#define JOINTS_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "reports.hpp"
#include "turan_algebra.hpp"

namespace joints {

enum class Property { moon_moser, lemma1, lemma2, theorem1, ourb0, bol76, zykov };

const char* property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);

// Checks leave `instance` empty; callers describe the instance themselves.
std::vector<CheckReport> check_moon_moser(const Graph& g);
CheckReport check_lemma1(const Graph& g, int r, const mpq_class& alpha);
CheckReport check_lemma2(const Graph& g, int r, const mpq_class& alpha, Lemma2Variant variant);
CheckReport check_theorem1(const Graph& g, int r, int s);
CheckReport check_ourb0(const Graph& g, int r);
CheckReport check_bol76(const Graph& g, int r, int s);
// Asserts the Zykov bound only when the multipartite structure is known:
// either passed in (parts known by construction) or recovered from a
// complete multipartite decomposition. Vacuous otherwise.
CheckReport check_zykov(const Graph& g, std::optional<int> known_parts = std::nullopt);

// alpha = 4^(-r-6) r^(-7), the value the main proof feeds into Lemma 2.
mpq_class proof_alpha(int r);

struct SweepOptions {
    std::vector<Property> properties;
    std::optional<int> r;               // pin r instead of sweeping the grid
    std::optional<int> s;               // pin s
    std::vector<mpq_class> alphas;      // empty = default grid {0, 1/10, 1/2, 1}
    Lemma2Variant variant = Lemma2Variant::proof_r4;
    unsigned threads = 1;
};

std::vector<mpq_class> default_alpha_grid();

// All labeled graphs of order n (n <= 7), every admissible parameter tuple
// from the grid. Deterministic; violations carry reconstructible edge masks.
SweepSummary sweep_exhaustive(int n, const SweepOptions& options);

struct RandomSweepConfig {
    int n = 0;
    RandomSpec spec;  // seed is the master seed; per-trial seeds are derived
    std::uint64_t trials = 1;
};

SweepSummary sweep_random(const RandomSweepConfig& config, const SweepOptions& options);

// Instances checked and violations found for a single graph; used by both
// sweep drivers and exposed for the CLI check subcommand.
struct GraphCheckOutcome {
    std::uint64_t instances = 0;
    std::vector<std::string> violations;
};
GraphCheckOutcome run_checks_on_graph(const Graph& g, const std::string& instance_prefix,
                                      const SweepOptions& options);

}  // namespace joints

#endif
