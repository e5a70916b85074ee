#include "verifier.hpp"

#include <chrono>
#include <sstream>
#include <thread>

namespace joints {

namespace {

mpz_class int_pow(int base, int exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exponent));
    return result;
}

bool in_theorem_range(int n, int r) {
    return mpz_class(n) > int_pow(r, 8);
}

}  // namespace

const char* property_name(Property p) {
    switch (p) {
        case Property::moon_moser: return "moon-moser";
        case Property::lemma1: return "lemma1";
        case Property::lemma2: return "lemma2";
        case Property::theorem1: return "theorem1";
        case Property::ourb0: return "ourb0";
        case Property::bol76: return "bol76";
        case Property::zykov: return "zykov";
    }
    return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
    for (Property p : {Property::moon_moser, Property::lemma1, Property::lemma2, Property::theorem1,
                       Property::ourb0, Property::bol76, Property::zykov})
        if (name == property_name(p)) return p;
    if (name == "moon_moser") return Property::moon_moser;
    return std::nullopt;
}

mpq_class proof_alpha(int r) {
    mpq_class alpha(1);
    mpz_class den = int_pow(4, r + 6) * int_pow(r, 7);
    alpha /= mpq_class(den);
    return alpha;
}

std::vector<mpq_class> default_alpha_grid() {
    return {mpq_class(0), mpq_class(1, 10), mpq_class(1, 2), mpq_class(1)};
}

std::vector<CheckReport> check_moon_moser(const Graph& g) {
    const int n = g.order();
    const CliqueVector kv = clique_vector(g);
    std::vector<CheckReport> reports;
    for (int t = 2; t < n; ++t) {
        if (kv.k(t) < 1) break;
        for (int s = 1; s < t; ++s) {
            CheckReport r;
            r.property = "moon-moser";
            std::ostringstream tag;
            tag << "s=" << s << " t=" << t;
            r.instance = tag.str();
            r.residual = moon_moser_residual(kv, n, s, t);
            r.verdict = *r.residual >= 0 ? Verdict::holds : Verdict::violated;
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

CheckReport check_lemma1(const Graph& g, int r, const mpq_class& alpha) {
    if (r < 3) throw std::invalid_argument("check_lemma1: need r >= 3");
    if (alpha < 0) throw std::invalid_argument("check_lemma1: need alpha >= 0");
    CheckReport report;
    report.property = "lemma1";
    const CliqueVector kv = clique_vector(g);
    if (kv.k(r) < 1) {
        report.hypothesis_holds = false;
        report.verdict = Verdict::vacuous;
        return report;
    }
    const Lemma1Bound bound = lemma1_bound(kv, g.order(), r, alpha);
    if (!bound.hypothesis_ok) {
        report.hypothesis_holds = false;
        report.verdict = Verdict::vacuous;
        return report;
    }
    report.residual = mpq_class(kv.k(2)) - bound.k2_bound;
    report.verdict = *report.residual > 0 ? Verdict::holds : Verdict::violated;
    return report;
}

CheckReport check_lemma2(const Graph& g, int r, const mpq_class& alpha, Lemma2Variant variant) {
    const int n = g.order();
    if (r < 2 || r > n) throw std::invalid_argument("check_lemma2: need 2 <= r <= n");
    if (alpha <= 0) throw std::invalid_argument("check_lemma2: need alpha > 0");
    CheckReport report;
    report.property = "lemma2";
    const mpz_class k_r = count_cliques(g, r);
    const mpz_class k_r_turan = multipartite_clique_count(turan_part_sizes(n, r), r);
    if (k_r < k_r_turan) {
        report.hypothesis_holds = false;
        report.verdict = Verdict::vacuous;
        return report;
    }
    const JointWitness joint = joint_size(g, r + 1);
    const mpq_class js_threshold = threshold(ThresholdKind::lemma2_js, n, r, &alpha);
    if (mpq_class(joint.size) > js_threshold) {
        report.branch = "js";
        report.residual = mpq_class(joint.size) - js_threshold;
        report.witness_edge = joint.edge;
        report.witness_count = joint.size;
        report.verdict = Verdict::holds;
        return report;
    }
    report.branch = "edges";
    const mpz_class k_2 = count_cliques(g, 2);
    report.residual = mpq_class(k_2) - lemma2_edge_bound(n, r, alpha, variant);
    report.verdict = *report.residual > 0 ? Verdict::holds : Verdict::violated;
    return report;
}

CheckReport check_theorem1(const Graph& g, int r, int s) {
    if (s < 2 || s > r) throw std::invalid_argument("check_theorem1: need 2 <= s <= r");
    const int n = g.order();
    CheckReport report;
    report.property = "theorem1";
    report.exploratory = !in_theorem_range(n, r);
    const mpz_class k_s = count_cliques(g, s);
    const mpz_class k_s_turan = multipartite_clique_count(turan_part_sizes(n, r), s);
    if (k_s < k_s_turan) {
        report.hypothesis_holds = false;
        report.verdict = Verdict::vacuous;
        return report;
    }
    if (is_turan(g, r)) {
        report.verdict = Verdict::extremal_case;
        return report;
    }
    const JointWitness joint = joint_size(g, r + 1);
    report.residual = mpq_class(joint.size) - threshold(ThresholdKind::theorem1, n, r);
    report.witness_edge = joint.edge;
    report.witness_count = joint.size;
    report.verdict = *report.residual > 0 ? Verdict::holds : Verdict::violated;
    return report;
}

CheckReport check_ourb0(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("check_ourb0: need r >= 2");
    const int n = g.order();
    CheckReport report;
    report.property = "ourb0";
    report.exploratory = !in_theorem_range(n, r);
    if (mpz_class(g.edge_count()) < turan_edge_count(n, r)) {
        report.hypothesis_holds = false;
        report.verdict = Verdict::vacuous;
        return report;
    }
    if (is_turan(g, r)) {
        report.verdict = Verdict::extremal_case;
        return report;
    }
    const JointWitness joint = joint_size(g, r + 1);
    report.residual = mpq_class(joint.size) - threshold(ThresholdKind::ourb0, n, r);
    report.witness_edge = joint.edge;
    report.witness_count = joint.size;
    report.verdict = *report.residual > 0 ? Verdict::holds : Verdict::violated;
    return report;
}

CheckReport check_bol76(const Graph& g, int r, int s) {
    const int n = g.order();
    if (s < 2 || s > r || r > n) throw std::invalid_argument("check_bol76: need 2 <= s <= r <= n");
    CheckReport report;
    report.property = "bol76";
    const PartSizes parts = turan_part_sizes(n, r);
    if (count_cliques(g, s) < multipartite_clique_count(parts, s)) {
        report.hypothesis_holds = false;
        report.verdict = Verdict::vacuous;
        return report;
    }
    report.residual = mpq_class(count_cliques(g, r) - multipartite_clique_count(parts, r));
    report.verdict = *report.residual >= 0 ? Verdict::holds : Verdict::violated;
    return report;
}

CheckReport check_zykov(const Graph& g, std::optional<int> known_parts) {
    CheckReport report;
    report.property = "zykov";
    int r = 0;
    if (known_parts) {
        r = *known_parts;
        if (r < 1) throw std::invalid_argument("check_zykov: part count must be positive");
    } else if (auto parts = complete_multipartite_decomposition(g)) {
        r = parts->parts();
    } else {
        report.hypothesis_holds = false;
        report.verdict = Verdict::vacuous;
        return report;
    }
    const int n = g.order();
    report.residual =
        mpq_class(multipartite_clique_count(turan_part_sizes(n, r), r) - count_cliques(g, r));
    report.verdict = *report.residual >= 0 ? Verdict::holds : Verdict::violated;
    return report;
}

namespace {

void record(GraphCheckOutcome& outcome, const CheckReport& report, const std::string& prefix,
            const std::string& detail) {
    ++outcome.instances;
    if (report.verdict == Verdict::violated)
        outcome.violations.push_back(prefix + " property=" + report.property +
                                     (detail.empty() ? "" : " " + detail));
}

}  // namespace

GraphCheckOutcome run_checks_on_graph(const Graph& g, const std::string& prefix,
                                      const SweepOptions& options) {
    GraphCheckOutcome outcome;
    const int n = g.order();
    const std::vector<mpq_class> alphas =
        options.alphas.empty() ? default_alpha_grid() : options.alphas;
    for (Property p : options.properties) {
        switch (p) {
            case Property::moon_moser:
                for (const auto& report : check_moon_moser(g))
                    record(outcome, report, prefix, report.instance);
                break;
            case Property::lemma1: {
                const int rlo = options.r.value_or(3);
                const int rhi = options.r.value_or(n);
                for (int r = std::max(rlo, 3); r <= rhi; ++r)
                    for (const auto& alpha : alphas) {
                        if (alpha < 0) continue;
                        record(outcome, check_lemma1(g, r, alpha), prefix,
                               "r=" + std::to_string(r) + " alpha=" + rational_to_string(alpha));
                    }
                break;
            }
            case Property::lemma2: {
                const int rlo = options.r.value_or(2);
                const int rhi = options.r.value_or(std::max(n, 0));
                for (int r = std::max(rlo, 2); r <= std::min(rhi, n); ++r) {
                    std::vector<mpq_class> grid;
                    for (const auto& alpha : alphas)
                        if (alpha > 0) grid.push_back(alpha);
                    if (options.alphas.empty()) grid.push_back(proof_alpha(r));
                    for (const auto& alpha : grid)
                        record(outcome, check_lemma2(g, r, alpha, options.variant), prefix,
                               "r=" + std::to_string(r) + " alpha=" + rational_to_string(alpha));
                }
                break;
            }
            case Property::theorem1: {
                const int rlo = options.r.value_or(2);
                const int rhi = options.r.value_or(n);
                for (int r = std::max(rlo, 2); r <= rhi; ++r) {
                    const int slo = options.s.value_or(2);
                    const int shi = options.s.value_or(r);
                    for (int s = std::max(slo, 2); s <= std::min(shi, r); ++s)
                        record(outcome, check_theorem1(g, r, s), prefix,
                               "r=" + std::to_string(r) + " s=" + std::to_string(s));
                }
                break;
            }
            case Property::ourb0: {
                const int rlo = options.r.value_or(2);
                const int rhi = options.r.value_or(std::max(n, 2));
                for (int r = std::max(rlo, 2); r <= rhi; ++r)
                    record(outcome, check_ourb0(g, r), prefix, "r=" + std::to_string(r));
                break;
            }
            case Property::bol76: {
                for (int r = std::max(options.r.value_or(2), 2);
                     r <= std::min(options.r.value_or(n), n); ++r) {
                    const int slo = options.s.value_or(2);
                    const int shi = options.s.value_or(r);
                    for (int s = std::max(slo, 2); s <= std::min(shi, r); ++s)
                        record(outcome, check_bol76(g, r, s), prefix,
                               "r=" + std::to_string(r) + " s=" + std::to_string(s));
                }
                break;
            }
            case Property::zykov:
                record(outcome, check_zykov(g, options.r), prefix, "");
                break;
        }
    }
    return outcome;
}

SweepSummary sweep_exhaustive(int n, const SweepOptions& options) {
    if (n > kMaxExhaustiveOrder)
        throw std::invalid_argument("sweep_exhaustive: refusing n > " +
                                    std::to_string(kMaxExhaustiveOrder));
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = labeled_graph_count(n);
    const unsigned t = std::max(1u, std::min<unsigned>(options.threads,
                                                       static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    std::vector<GraphCheckOutcome> partial(t);
    auto work = [&](unsigned chunk) {
        const std::uint64_t begin = total * chunk / t;
        const std::uint64_t end = total * (chunk + 1) / t;
        GraphCheckOutcome local;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            auto one = run_checks_on_graph(g, "n=" + std::to_string(n) + " mask=" + std::to_string(mask),
                                           options);
            local.instances += one.instances;
            for (auto& v : one.violations) local.violations.push_back(std::move(v));
        }
        partial[chunk] = std::move(local);
    };
    if (t == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < t; ++i) pool.emplace_back(work, i);
        for (auto& th : pool) th.join();
    }
    SweepSummary summary;
    for (Property p : options.properties) summary.properties.push_back(property_name(p));
    for (auto& part : partial) {
        summary.instances += part.instances;
        for (auto& v : part.violations) summary.violations.push_back(std::move(v));
    }
    summary.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                     std::chrono::steady_clock::now() - start)
                                                     .count());
    return summary;
}

SweepSummary sweep_random(const RandomSweepConfig& config, const SweepOptions& options) {
    if (config.trials < 1) throw std::invalid_argument("sweep_random: need trials >= 1");
    const auto start = std::chrono::steady_clock::now();
    const unsigned t = std::max(1u, std::min<unsigned>(options.threads,
                                                       static_cast<unsigned>(std::min<std::uint64_t>(
                                                           config.trials, 64))));
    std::vector<GraphCheckOutcome> partial(t);
    auto work = [&](unsigned chunk) {
        const std::uint64_t begin = config.trials * chunk / t;
        const std::uint64_t end = config.trials * (chunk + 1) / t;
        GraphCheckOutcome local;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            RandomSpec spec = config.spec;
            spec.seed = Rng::derive_seed(config.spec.seed, trial);
            const Graph g = random_graph(config.n, spec);
            auto one = run_checks_on_graph(g,
                                           "n=" + std::to_string(config.n) + " trial=" +
                                               std::to_string(trial) + " trial-seed=" +
                                               std::to_string(spec.seed),
                                           options);
            local.instances += one.instances;
            for (auto& v : one.violations) local.violations.push_back(std::move(v));
        }
        partial[chunk] = std::move(local);
    };
    if (t == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < t; ++i) pool.emplace_back(work, i);
        for (auto& th : pool) th.join();
    }
    SweepSummary summary;
    for (Property p : options.properties) summary.properties.push_back(property_name(p));
    for (auto& part : partial) {
        summary.instances += part.instances;
        for (auto& v : part.violations) summary.violations.push_back(std::move(v));
    }
    summary.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                     std::chrono::steady_clock::now() - start)
                                                     .count());
    return summary;
}

}  // namespace joints
