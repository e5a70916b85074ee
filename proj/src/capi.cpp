#include "joints/joints.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "cliques.hpp"
#include "generators.hpp"
#include "graph_io.hpp"
#include "reports.hpp"
#include "search.hpp"
#include "turan_algebra.hpp"
#include "verifier.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
joints_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const joints::ParseError& e) {
        g_last_error = e.what();
        return JOINTS_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return JOINTS_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return JOINTS_ERR_INTERNAL;
    }
}

joints::SweepOptions build_options(const char* properties, unsigned r, unsigned s,
                                   const char* alpha, const char* variant, unsigned threads) {
    joints::SweepOptions options;
    std::string props = properties ? properties : "";
    std::size_t start = 0;
    while (start < props.size()) {
        std::size_t comma = props.find(',', start);
        if (comma == std::string::npos) comma = props.size();
        const std::string name = props.substr(start, comma - start);
        if (!name.empty()) {
            auto p = joints::property_from_name(name);
            if (!p) throw std::invalid_argument("unknown property: " + name);
            options.properties.push_back(*p);
        }
        start = comma + 1;
    }
    if (options.properties.empty()) throw std::invalid_argument("no properties selected");
    if (r > 0) options.r = static_cast<int>(r);
    if (s > 0) options.s = static_cast<int>(s);
    if (alpha) options.alphas = {joints::parse_rational(alpha)};
    if (variant) {
        const std::string v = variant;
        if (v == "stated_r3")
            options.variant = joints::Lemma2Variant::stated_r3;
        else if (v == "proof_r4")
            options.variant = joints::Lemma2Variant::proof_r4;
        else
            throw std::invalid_argument("unknown variant: " + v);
    }
    options.threads = threads;
    return options;
}

}  // namespace

struct joints_graph {
    joints::Graph g;
};

extern "C" {

const char* joints_last_error(void) {
    return g_last_error.c_str();
}

void joints_string_free(char* text) {
    std::free(text);
}

void joints_graph_free(joints_graph* graph) {
    delete graph;
}

joints_status joints_graph_parse_graph6(const char* line, joints_graph** out) {
    return guarded([&] {
        if (!line || !out) throw std::invalid_argument("null argument");
        *out = new joints_graph{joints::parse_graph6(line)};
        return JOINTS_OK;
    });
}

joints_status joints_graph_parse(const char* text, joints_graph** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        *out = new joints_graph{joints::parse_graph_auto(text)};
        return JOINTS_OK;
    });
}

joints_status joints_graph_write_graph6(const joints_graph* graph, char** out) {
    return guarded([&] {
        if (!graph || !out) throw std::invalid_argument("null argument");
        *out = dup_string(joints::write_graph6(graph->g));
        return JOINTS_OK;
    });
}

joints_status joints_gen_turan(unsigned n, unsigned r, joints_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = new joints_graph{joints::turan(static_cast<int>(n), static_cast<int>(r))};
        return JOINTS_OK;
    });
}

joints_status joints_gen_turan_plus_edge(unsigned n, unsigned r, joints_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = new joints_graph{joints::turan_plus_edge(static_cast<int>(n), static_cast<int>(r))};
        return JOINTS_OK;
    });
}

joints_status joints_gen_multipartite(const unsigned* sizes, size_t count, joints_graph** out) {
    return guarded([&] {
        if (!sizes || !out) throw std::invalid_argument("null argument");
        joints::PartSizes parts;
        for (size_t i = 0; i < count; ++i) parts.sizes.push_back(static_cast<int>(sizes[i]));
        *out = new joints_graph{joints::complete_multipartite(parts)};
        return JOINTS_OK;
    });
}

joints_status joints_gen_gnp(unsigned n, const char* p, uint64_t seed, joints_graph** out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        joints::RandomSpec spec;
        spec.seed = seed;
        spec.model = joints::GnpModel{joints::parse_rational(p)};
        *out = new joints_graph{joints::random_graph(static_cast<int>(n), spec)};
        return JOINTS_OK;
    });
}

joints_status joints_gen_gnm(unsigned n, uint64_t m, uint64_t seed, joints_graph** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        joints::RandomSpec spec;
        spec.seed = seed;
        spec.model = joints::GnmModel{m};
        *out = new joints_graph{joints::random_graph(static_cast<int>(n), spec)};
        return JOINTS_OK;
    });
}

unsigned joints_graph_order(const joints_graph* graph) {
    return graph ? static_cast<unsigned>(graph->g.order()) : 0;
}

uint64_t joints_graph_edge_count(const joints_graph* graph) {
    return graph ? graph->g.edge_count() : 0;
}

joints_status joints_count_cliques(const joints_graph* graph, unsigned order, unsigned threads,
                                   char** count_decimal) {
    return guarded([&] {
        if (!graph || !count_decimal) throw std::invalid_argument("null argument");
        *count_decimal =
            dup_string(joints::count_cliques(graph->g, static_cast<int>(order), threads).get_str());
        return JOINTS_OK;
    });
}

joints_status joints_clique_vector(const joints_graph* graph, char** counts_csv) {
    return guarded([&] {
        if (!graph || !counts_csv) throw std::invalid_argument("null argument");
        const joints::CliqueVector kv = joints::clique_vector(graph->g);
        std::ostringstream out;
        for (std::size_t i = 0; i < kv.counts.size(); ++i) {
            if (i) out << ",";
            out << kv.counts[i].get_str();
        }
        *counts_csv = dup_string(out.str());
        return JOINTS_OK;
    });
}

joints_status joints_joint_size(const joints_graph* graph, unsigned order, unsigned threads,
                                char** report_text) {
    return guarded([&] {
        if (!graph || !report_text) throw std::invalid_argument("null argument");
        const joints::JointWitness w = joints::joint_size(graph->g, static_cast<int>(order), threads);
        std::ostringstream out;
        out << "schema: 1\n"
            << "type: joint-size\n"
            << "order: " << w.order << "\n"
            << "size: " << w.size.get_str() << "\n";
        if (w.edge) out << "witness-edge: " << w.edge->first << " " << w.edge->second << "\n";
        *report_text = dup_string(out.str());
        return JOINTS_OK;
    });
}

joints_status joints_check(const joints_graph* graph, const char* property, unsigned r, unsigned s,
                           const char* alpha, const char* variant, char** reports_text) {
    return guarded([&] {
        if (!graph || !property || !reports_text) throw std::invalid_argument("null argument");
        const auto prop = joints::property_from_name(property);
        if (!prop) throw std::invalid_argument(std::string("unknown property: ") + property);
        joints::Lemma2Variant var = joints::Lemma2Variant::proof_r4;
        if (variant) {
            const std::string v = variant;
            if (v == "stated_r3")
                var = joints::Lemma2Variant::stated_r3;
            else if (v == "proof_r4")
                var = joints::Lemma2Variant::proof_r4;
            else
                throw std::invalid_argument("unknown variant: " + v);
        }
        mpq_class a;
        const bool has_alpha = alpha != nullptr;
        if (has_alpha) a = joints::parse_rational(alpha);

        std::vector<joints::CheckReport> reports;
        const joints::Graph& g = graph->g;
        switch (*prop) {
            case joints::Property::moon_moser:
                reports = joints::check_moon_moser(g);
                break;
            case joints::Property::lemma1:
                if (!has_alpha) throw std::invalid_argument("lemma1 requires alpha");
                reports.push_back(joints::check_lemma1(g, static_cast<int>(r), a));
                break;
            case joints::Property::lemma2:
                if (!has_alpha) throw std::invalid_argument("lemma2 requires alpha");
                reports.push_back(joints::check_lemma2(g, static_cast<int>(r), a, var));
                break;
            case joints::Property::theorem1:
                reports.push_back(
                    joints::check_theorem1(g, static_cast<int>(r), static_cast<int>(s ? s : r)));
                break;
            case joints::Property::ourb0:
                reports.push_back(joints::check_ourb0(g, static_cast<int>(r)));
                break;
            case joints::Property::bol76:
                reports.push_back(
                    joints::check_bol76(g, static_cast<int>(r), static_cast<int>(s ? s : r)));
                break;
            case joints::Property::zykov:
                reports.push_back(joints::check_zykov(
                    g, r > 0 ? std::optional<int>(static_cast<int>(r)) : std::nullopt));
                break;
        }
        std::ostringstream out;
        bool violated = false;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out << "\n";
            out << joints::emit_report(reports[i]);
            violated |= reports[i].verdict == joints::Verdict::violated;
        }
        *reports_text = dup_string(out.str());
        if (violated) {
            g_last_error = "property violated";
            return JOINTS_ERR_VIOLATION;
        }
        return JOINTS_OK;
    });
}

joints_status joints_sweep_exhaustive(unsigned n, const char* properties, unsigned r, unsigned s,
                                      const char* alpha, const char* variant, unsigned threads,
                                      char** summary_text) {
    return guarded([&] {
        if (!properties || !summary_text) throw std::invalid_argument("null argument");
        const auto options = build_options(properties, r, s, alpha, variant, threads);
        joints::SweepSummary summary = joints::sweep_exhaustive(static_cast<int>(n), options);
        const bool violated = !summary.violations.empty();
        summary.wall_ms = 0;  // timing is a diagnostic; keep report text deterministic
        *summary_text = dup_string(joints::emit_report(summary));
        if (violated) {
            g_last_error = "sweep found violations";
            return JOINTS_ERR_VIOLATION;
        }
        return JOINTS_OK;
    });
}

joints_status joints_sweep_random(unsigned n, const char* model, const char* p, uint64_t m,
                                  uint64_t trials, uint64_t seed, const char* properties,
                                  unsigned r, unsigned s, const char* alpha, const char* variant,
                                  unsigned threads, char** summary_text) {
    return guarded([&] {
        if (!model || !properties || !summary_text) throw std::invalid_argument("null argument");
        const auto options = build_options(properties, r, s, alpha, variant, threads);
        joints::RandomSweepConfig config;
        config.n = static_cast<int>(n);
        config.trials = trials;
        config.spec.seed = seed;
        const std::string model_name = model;
        if (model_name == "gnp") {
            if (!p) throw std::invalid_argument("gnp model requires p");
            config.spec.model = joints::GnpModel{joints::parse_rational(p)};
        } else if (model_name == "gnm") {
            config.spec.model = joints::GnmModel{m};
        } else {
            throw std::invalid_argument("unknown model: " + model_name);
        }
        joints::SweepSummary summary = joints::sweep_random(config, options);
        const bool violated = !summary.violations.empty();
        summary.wall_ms = 0;
        *summary_text = dup_string(joints::emit_report(summary));
        if (violated) {
            g_last_error = "sweep found violations";
            return JOINTS_ERR_VIOLATION;
        }
        return JOINTS_OK;
    });
}

joints_status joints_probe(unsigned n, unsigned r, unsigned s, uint64_t steps, uint64_t seed,
                           unsigned restarts, unsigned threads, char** result_text) {
    return guarded([&] {
        if (!result_text) throw std::invalid_argument("null argument");
        joints::ProbeConfig config;
        config.n = static_cast<int>(n);
        config.r = static_cast<int>(r);
        config.s = static_cast<int>(s);
        config.steps = steps;
        config.seed = seed;
        config.restarts = restarts;
        config.threads = threads;
        const joints::ProbeResult result = joints::probe_extremal(config);
        joints::validate_probe_result(result);
        *result_text = dup_string(joints::emit_report(result));
        return JOINTS_OK;
    });
}

}  // extern "C"
