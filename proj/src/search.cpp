#include "search.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cliques.hpp"
#include "generators.hpp"
#include "turan_algebra.hpp"

namespace joints {

namespace {

// Annealing schedule: geometric cooling, fixed start and end temperatures.
// Temperatures are in units of the js objective; the 1/1000 edge term
// breaks objective ties toward fewer edges.
constexpr double kStartTemperature = 3.0;
constexpr double kEndTemperature = 0.01;
constexpr double kEdgeTieWeight = 0.001;

struct RestartOutcome {
    Graph best;
    mpz_class best_js;
    std::vector<mpz_class> log;
};

RestartOutcome run_restart(const ProbeConfig& config, std::uint64_t restart_seed) {
    const int n = config.n;
    const int r = config.r;
    const mpz_class k_s_min = multipartite_clique_count(turan_part_sizes(n, r), config.s);

    Graph g = turan_plus_edge(n, r);
    JointWitness current = joint_size(g, r + 1);
    mpz_class current_js = current.size;
    std::uint64_t current_edges = g.edge_count();

    RestartOutcome out{g, current_js, {current_js}};
    std::uint64_t best_edges = current_edges;

    Rng rng(restart_seed);
    const double cooling =
        config.steps > 0 ? std::exp(std::log(kEndTemperature / kStartTemperature) /
                                    static_cast<double>(config.steps))
                         : 1.0;
    double temperature = kStartTemperature;

    for (std::uint64_t step = 0; step < config.steps; ++step, temperature *= cooling) {
        int u = -1, v = -1;
        // Half the moves attack the current bottleneck directly: drop one of
        // the edges forming the largest joint. The rest are uniform toggles.
        if (current.edge && (rng.next() & 1)) {
            const auto common = common_neighborhood(g, current.edge->first, current.edge->second);
            if (!common.empty()) {
                const int w = common[static_cast<std::size_t>(
                    rng.below(static_cast<std::uint64_t>(common.size())))];
                u = (rng.next() & 1) ? current.edge->first : current.edge->second;
                v = w;
            }
        }
        if (u < 0) {
            u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
            if (v >= u) ++v;
        }
        g.toggle_edge(u, v);

        bool feasible = count_cliques(g, config.s) >= k_s_min && !is_turan(g, r);
        if (!feasible) {
            g.toggle_edge(u, v);
            continue;
        }
        const JointWitness candidate = joint_size(g, r + 1);
        const mpz_class& candidate_js = candidate.size;
        const std::uint64_t candidate_edges = g.edge_count();
        const double delta = mpq_class(candidate_js - current_js).get_d() +
                             kEdgeTieWeight * (static_cast<double>(candidate_edges) -
                                               static_cast<double>(current_edges));
        bool accept = delta <= 0;
        if (!accept) {
            const double p = std::exp(-delta / temperature);
            accept = static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < p;
        }
        if (!accept) {
            g.toggle_edge(u, v);
            continue;
        }
        current = candidate;
        current_js = candidate.size;
        current_edges = candidate_edges;
        if (candidate_js < out.best_js ||
            (candidate_js == out.best_js && candidate_edges < best_edges)) {
            out.best = g;
            out.best_js = candidate_js;
            best_edges = candidate_edges;
        }
        out.log.push_back(out.best_js);
    }
    return out;
}

}  // namespace

ProbeResult probe_extremal(const ProbeConfig& config) {
    if (config.n <= config.r) throw std::invalid_argument("probe_extremal: need n > r");
    if (config.s < 2 || config.s > config.r)
        throw std::invalid_argument("probe_extremal: need 2 <= s <= r");
    const unsigned restarts = std::max(1u, config.restarts);

    std::vector<RestartOutcome> outcomes(restarts);
    auto work = [&](unsigned i) { outcomes[i] = run_restart(config, Rng::derive_seed(config.seed, i)); };
    if (restarts == 1 || config.threads <= 1) {
        for (unsigned i = 0; i < restarts; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        const unsigned t = std::min(config.threads, restarts);
        for (unsigned c = 0; c < t; ++c)
            pool.emplace_back([&, c] {
                for (unsigned i = c; i < restarts; i += t) work(i);
            });
        for (auto& th : pool) th.join();
    }

    // Global best: smallest js, then lexicographically smallest graph6 line.
    const RestartOutcome* best = &outcomes.front();
    std::string best_g6 = write_graph6(best->best);
    for (unsigned i = 1; i < restarts; ++i) {
        std::string g6 = write_graph6(outcomes[i].best);
        if (outcomes[i].best_js < best->best_js ||
            (outcomes[i].best_js == best->best_js && g6 < best_g6)) {
            best = &outcomes[i];
            best_g6 = std::move(g6);
        }
    }

    ProbeResult result;
    result.n = config.n;
    result.r = config.r;
    result.s = config.s;
    result.steps = config.steps;
    result.seed = config.seed;
    result.best_js = best->best_js;
    mpz_class n_pow;
    mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(config.n),
                  static_cast<unsigned long>(config.r - 1));
    result.ratio = mpq_class(best->best_js, n_pow);
    result.ratio.canonicalize();
    result.graph6 = best_g6;
    if (config.best_log) *config.best_log = best->log;
    return result;
}

void validate_probe_result(const ProbeResult& result) {
    const Graph g = parse_graph6(result.graph6);
    if (g.order() != result.n) throw std::runtime_error("probe validation: order mismatch");
    const mpz_class k_s_min =
        multipartite_clique_count(turan_part_sizes(result.n, result.r), result.s);
    if (count_cliques(g, result.s) < k_s_min)
        throw std::runtime_error("probe validation: k_s constraint violated");
    if (is_turan(g, result.r))
        throw std::runtime_error("probe validation: result is the Turan graph itself");
    if (joint_size(g, result.r + 1).size != result.best_js)
        throw std::runtime_error("probe validation: joint size mismatch");
    mpz_class n_pow;
    mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(result.n),
                  static_cast<unsigned long>(result.r - 1));
    mpq_class expect(result.best_js, n_pow);
    expect.canonicalize();
    if (expect != result.ratio) throw std::runtime_error("probe validation: ratio mismatch");
}

}  // namespace joints
