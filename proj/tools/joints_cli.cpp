// Batch front end over the joints C API: generation, counting, joint sizes,
// property checks, sweeps, the extremal probe, and a fixed benchmark suite.
//
// Exit codes: 0 success / no violation, 1 usage or input error, 2 property
// violation detected.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "joints/joints.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct StringOut {
    char* text = nullptr;
    ~StringOut() {
        joints_string_free(text);
    }
    std::string str() const { return text ? text : ""; }
};

using GraphPtr = std::unique_ptr<joints_graph, decltype(&joints_graph_free)>;

[[noreturn]] void die(const std::string& message, int code = kExitUsage) {
    std::cerr << "error: " << message << "\n";
    std::exit(code);
}

void expect_ok(joints_status status, const char* what) {
    if (status == JOINTS_OK) return;
    const int code = status == JOINTS_ERR_VIOLATION ? kExitViolation : kExitUsage;
    die(std::string(what) + ": " + joints_last_error(), code);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct FamilyFlags {
    std::string family;
    unsigned n = 0;
    unsigned r = 0;
    std::vector<unsigned> parts;
    std::string p;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags) {
    cmd->add_option("--family", flags.family, "turan|turan-plus-edge|multipartite|gnp|gnm");
    cmd->add_option("--n", flags.n, "graph order");
    cmd->add_option("--parts", flags.parts, "multipartite part sizes a,b,c")->delimiter(',');
    cmd->add_option("--p", flags.p, "edge probability num/den (gnp)");
    cmd->add_option("--m", flags.m, "edge count (gnm)");
    cmd->add_option("--seed", flags.seed, "random seed (required for gnp/gnm)")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
}

GraphPtr build_family(const FamilyFlags& flags) {
    joints_graph* raw = nullptr;
    if (flags.family == "turan") {
        expect_ok(joints_gen_turan(flags.n, flags.r, &raw), "gen turan");
    } else if (flags.family == "turan-plus-edge") {
        expect_ok(joints_gen_turan_plus_edge(flags.n, flags.r, &raw), "gen turan-plus-edge");
    } else if (flags.family == "multipartite") {
        if (flags.parts.empty()) die("--family multipartite requires --parts");
        expect_ok(joints_gen_multipartite(flags.parts.data(), flags.parts.size(), &raw),
                  "gen multipartite");
    } else if (flags.family == "gnp") {
        if (flags.p.empty()) die("--family gnp requires --p");
        if (!flags.seed_set) die("--family gnp requires an explicit --seed");
        expect_ok(joints_gen_gnp(flags.n, flags.p.c_str(), flags.seed, &raw), "gen gnp");
    } else if (flags.family == "gnm") {
        if (!flags.seed_set) die("--family gnm requires an explicit --seed");
        expect_ok(joints_gen_gnm(flags.n, flags.m, flags.seed, &raw), "gen gnm");
    } else {
        die("unknown family: " + flags.family);
    }
    return GraphPtr(raw, &joints_graph_free);
}

GraphPtr load_graph(const std::string& path) {
    joints_graph* raw = nullptr;
    expect_ok(joints_graph_parse(read_file(path).c_str(), &raw), "parse input");
    return GraphPtr(raw, &joints_graph_free);
}

int run_bench(unsigned threads) {
    struct Case {
        const char* name;
        std::string expected;
        std::string (*run)(unsigned);
    };
    const Case cases[] = {
        {"js3-turan3-3000", "1000",
         [](unsigned t) {
             joints_graph* g = nullptr;
             expect_ok(joints_gen_turan(3000, 3, &g), "bench gen");
             GraphPtr guard(g, &joints_graph_free);
             StringOut report;
             expect_ok(joints_joint_size(g, 3, t, &report.text), "bench js");
             // pull the size field out of the report
             std::istringstream in(report.str());
             std::string line;
             while (std::getline(in, line))
                 if (line.rfind("size: ", 0) == 0) return line.substr(6);
             return std::string("?");
         }},
        {"k4-turan4-400", "100000000",
         [](unsigned t) {
             joints_graph* g = nullptr;
             expect_ok(joints_gen_turan(400, 4, &g), "bench gen");
             GraphPtr guard(g, &joints_graph_free);
             StringOut count;
             expect_ok(joints_count_cliques(g, 4, t, &count.text), "bench count");
             return count.str();
         }},
        {"js4-turan3-90-plus-edge", "900",
         [](unsigned t) {
             joints_graph* g = nullptr;
             expect_ok(joints_gen_turan_plus_edge(90, 3, &g), "bench gen");
             GraphPtr guard(g, &joints_graph_free);
             StringOut report;
             expect_ok(joints_joint_size(g, 4, t, &report.text), "bench js");
             std::istringstream in(report.str());
             std::string line;
             while (std::getline(in, line))
                 if (line.rfind("size: ", 0) == 0) return line.substr(6);
             return std::string("?");
         }},
    };
    bool all_ok = true;
    for (const auto& c : cases) {
        const auto start = std::chrono::steady_clock::now();
        const std::string got = c.run(threads);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool ok = got == c.expected;
        all_ok &= ok;
        std::cout << c.name << ": " << got << " " << (ok ? "ok" : "MISMATCH") << "\n";
        std::cerr << c.name << ": " << ms << " ms (threads=" << threads << ")\n";
    }
    return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact clique, joint-size, and Turan-graph verification toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and print it as graph6");
    FamilyFlags gen_flags;
    add_family_flags(gen, gen_flags);
    gen->add_option("--r", gen_flags.r, "number of parts");
    std::string gen_out;
    gen->add_option("--out", gen_out, "write to PATH instead of stdout");

    // count
    auto* count = app.add_subcommand("count", "count r-cliques of an input graph");
    std::string count_input;
    unsigned count_order = 0;
    bool count_vector = false;
    unsigned count_threads = 1;
    count->add_option("--input", count_input, "graph file (graph6 or edge list)")->required();
    auto* count_order_opt = count->add_option("--order", count_order, "clique order r");
    count->add_flag("--vector", count_vector, "print the whole clique vector k_0..k_omega");
    count->add_option("--threads", count_threads, "worker threads");

    // js
    auto* js = app.add_subcommand("js", "maximum r-joint of an input graph, with witness");
    std::string js_input;
    unsigned js_order = 0;
    unsigned js_threads = 1;
    js->add_option("--input", js_input, "graph file (graph6 or edge list)")->required();
    js->add_option("--order", js_order, "joint order r (>= 3)")->required();
    js->add_option("--threads", js_threads, "worker threads");

    // check
    auto* check = app.add_subcommand("check", "run one property check on a graph");
    std::string check_property, check_input, check_alpha, check_variant;
    FamilyFlags check_flags;
    unsigned check_r = 0, check_s = 0;
    check->add_option("--property", check_property,
                      "moon-moser|lemma1|lemma2|theorem1|ourb0|bol76|zykov")
        ->required();
    check->add_option("--input", check_input, "graph file");
    add_family_flags(check, check_flags);
    check->add_option("--r", check_r, "parameter r");
    check->add_option("--s", check_s, "parameter s");
    check->add_option("--alpha", check_alpha, "rational alpha num/den");
    check->add_option("--variant", check_variant, "lemma2 tail: stated_r3|proof_r4");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "check properties over many graphs");
    std::string sweep_mode, sweep_properties, sweep_model = "gnp", sweep_p, sweep_alpha, sweep_variant;
    unsigned sweep_n = 0, sweep_r = 0, sweep_s = 0, sweep_threads = 1;
    std::uint64_t sweep_trials = 1, sweep_seed = 0, sweep_m = 0;
    bool sweep_seed_set = false;
    sweep->add_option("--mode", sweep_mode, "exhaustive|random")->required();
    sweep->add_option("--n", sweep_n, "graph order")->required();
    sweep->add_option("--properties", sweep_properties, "comma-separated property list")->required();
    sweep->add_option("--trials", sweep_trials, "random trials");
    sweep->add_option("--seed", sweep_seed, "master seed (required for random mode)")
        ->each([&sweep_seed_set](const std::string&) { sweep_seed_set = true; });
    sweep->add_option("--model", sweep_model, "gnp|gnm (random mode)");
    sweep->add_option("--p", sweep_p, "edge probability num/den (gnp)");
    sweep->add_option("--m", sweep_m, "edge count (gnm)");
    sweep->add_option("--r", sweep_r, "pin parameter r");
    sweep->add_option("--s", sweep_s, "pin parameter s");
    sweep->add_option("--alpha", sweep_alpha, "pin alpha (default: documented grid)");
    sweep->add_option("--variant", sweep_variant, "lemma2 tail: stated_r3|proof_r4");
    sweep->add_option("--threads", sweep_threads, "worker threads");

    // probe
    auto* probe = app.add_subcommand("probe", "search for non-Turan graphs with small joint size");
    unsigned probe_n = 0, probe_r = 0, probe_s = 0, probe_restarts = 1, probe_threads = 1;
    std::uint64_t probe_steps = 0, probe_seed = 0;
    bool probe_seed_set = false;
    probe->add_option("--n", probe_n)->required();
    probe->add_option("--r", probe_r)->required();
    probe->add_option("--s", probe_s)->required();
    probe->add_option("--steps", probe_steps)->required();
    probe->add_option("--seed", probe_seed, "annealing seed (required)")
        ->each([&probe_seed_set](const std::string&) { probe_seed_set = true; });
    probe->add_option("--restarts", probe_restarts, "independent restarts");
    probe->add_option("--threads", probe_threads, "worker threads for restarts");

    // bench
    auto* bench = app.add_subcommand("bench", "run the fixed benchmark suite");
    std::string bench_suite = "default";
    unsigned bench_threads = 1;
    bench->add_option("--suite", bench_suite, "suite name (default)");
    bench->add_option("--threads", bench_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen->parsed()) {
        GraphPtr g = build_family(gen_flags);
        StringOut line;
        expect_ok(joints_graph_write_graph6(g.get(), &line.text), "write graph6");
        if (gen_out.empty()) {
            std::cout << line.str() << "\n";
        } else {
            std::ofstream out(gen_out, std::ios::binary);
            if (!out) die("cannot write " + gen_out);
            out << line.str() << "\n";
        }
        return kExitOk;
    }

    if (count->parsed()) {
        GraphPtr g = load_graph(count_input);
        if (count_vector) {
            StringOut csv;
            expect_ok(joints_clique_vector(g.get(), &csv.text), "clique vector");
            std::cout << csv.str() << "\n";
        } else {
            if (count_order_opt->count() == 0) die("count requires --order (or --vector)");
            StringOut value;
            expect_ok(joints_count_cliques(g.get(), count_order, count_threads, &value.text),
                      "count cliques");
            std::cout << value.str() << "\n";
        }
        return kExitOk;
    }

    if (js->parsed()) {
        GraphPtr g = load_graph(js_input);
        StringOut report;
        expect_ok(joints_joint_size(g.get(), js_order, js_threads, &report.text), "joint size");
        std::cout << report.str();
        return kExitOk;
    }

    if (check->parsed()) {
        const bool has_input = !check_input.empty();
        const bool has_family = !check_flags.family.empty();
        if (has_input == has_family) die("check requires exactly one of --input or --family");
        check_flags.r = check_flags.r ? check_flags.r : check_r;
        GraphPtr g = has_input ? load_graph(check_input) : build_family(check_flags);
        StringOut reports;
        const joints_status status = joints_check(
            g.get(), check_property.c_str(), check_r, check_s,
            check_alpha.empty() ? nullptr : check_alpha.c_str(),
            check_variant.empty() ? nullptr : check_variant.c_str(), &reports.text);
        if (status != JOINTS_OK && status != JOINTS_ERR_VIOLATION)
            die(std::string("check: ") + joints_last_error());
        std::cout << reports.str();
        return status == JOINTS_OK ? kExitOk : kExitViolation;
    }

    if (sweep->parsed()) {
        StringOut summary;
        joints_status status;
        if (sweep_mode == "exhaustive") {
            status = joints_sweep_exhaustive(
                sweep_n, sweep_properties.c_str(), sweep_r, sweep_s,
                sweep_alpha.empty() ? nullptr : sweep_alpha.c_str(),
                sweep_variant.empty() ? nullptr : sweep_variant.c_str(), sweep_threads,
                &summary.text);
        } else if (sweep_mode == "random") {
            if (!sweep_seed_set) die("random sweeps require an explicit --seed");
            status = joints_sweep_random(
                sweep_n, sweep_model.c_str(), sweep_p.empty() ? nullptr : sweep_p.c_str(), sweep_m,
                sweep_trials, sweep_seed, sweep_properties.c_str(), sweep_r, sweep_s,
                sweep_alpha.empty() ? nullptr : sweep_alpha.c_str(),
                sweep_variant.empty() ? nullptr : sweep_variant.c_str(), sweep_threads,
                &summary.text);
        } else {
            die("unknown sweep mode: " + sweep_mode);
        }
        if (status != JOINTS_OK && status != JOINTS_ERR_VIOLATION)
            die(std::string("sweep: ") + joints_last_error());
        std::cout << summary.str();
        return status == JOINTS_OK ? kExitOk : kExitViolation;
    }

    if (probe->parsed()) {
        if (!probe_seed_set) die("probe requires an explicit --seed");
        StringOut result;
        expect_ok(joints_probe(probe_n, probe_r, probe_s, probe_steps, probe_seed, probe_restarts,
                               probe_threads, &result.text),
                  "probe");
        std::cout << result.str();
        return kExitOk;
    }

    if (bench->parsed()) {
        if (bench_suite != "default") die("unknown bench suite: " + bench_suite);
        return run_bench(bench_threads);
    }

    return kExitUsage;
}
