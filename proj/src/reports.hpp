#ifndef JOINTS_REPORTS_HPP
#define JOINTS_REPORTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "graph_io.hpp"

namespace joints {

inline constexpr int kReportSchema = 1;

enum class Verdict { holds, vacuous, violated, extremal_case };

const char* verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

// Structured verdict for one property check. `instance` is a single-line
// description carrying everything needed to rebuild the instance
// (family or seed or edge mask, n, r, s, alpha, variant).
struct CheckReport {
    std::string property;
    std::string instance;
    bool hypothesis_holds = true;
    std::optional<std::string> branch;
    std::optional<mpq_class> residual;
    Verdict verdict = Verdict::holds;
    std::optional<std::pair<int, int>> witness_edge;
    std::optional<mpz_class> witness_count;
    std::optional<bool> exploratory;  // theorem-range flag: n <= r^8

    bool operator==(const CheckReport&) const = default;
};

struct SweepSummary {
    std::vector<std::string> properties;
    std::uint64_t instances = 0;
    std::vector<std::string> violations;  // reconstructible descriptors
    std::uint64_t wall_ms = 0;

    bool operator==(const SweepSummary&) const = default;
};

struct ProbeResult {
    int n = 0;
    int r = 0;
    int s = 0;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    mpz_class best_js;
    mpq_class ratio;  // best_js / n^(r-1)
    std::string graph6;

    bool operator==(const ProbeResult&) const = default;
};

using Report = std::variant<CheckReport, SweepSummary, ProbeResult>;

// Line-oriented "key: value" emission; rationals as "num/den", counts as
// plain decimal. emit then parse is the identity.
std::string emit_report(const CheckReport& report);
std::string emit_report(const SweepSummary& summary);
std::string emit_report(const ProbeResult& result);
std::string emit_report(const Report& report);

Report parse_report(const std::string& text);

mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

}  // namespace joints

#endif
