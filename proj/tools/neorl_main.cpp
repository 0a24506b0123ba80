// Command-line front door: single trials, seeded batches across the preset
// architectures, wiring inspection, config round-trips and the brute-force
// verification suites.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neorl/config.hpp"
#include "neorl/errors.hpp"
#include "neorl/harness.hpp"
#include "neorl/svg_plot.hpp"
#include "neorl/verify.hpp"
#include "neorl/version.hpp"

namespace fs = std::filesystem;
using namespace neorl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

// Flag values for everything that can override the config file. Only options
// the user actually passed are applied, so precedence is flag > file >
// built-in default.
struct SharedFlags {
    std::string preset;
    long steps = 0;
    int sample_interval = 0;
    int steps_per_second = 0;
    int workers = 0;
    double epsilon = 0.0;
    double gamma = 0.0;
    double alpha = 0.0;
    int pc_resolution = 0;
    int ovc_resolution = 0;
    double feedback_gain = 0.0;
    double pc_tap_weight = 0.0;
    double ovc_tap_weight = 0.0;
    bool normalize_desire = false;

    CLI::Option* preset_opt = nullptr;
    CLI::Option* steps_opt = nullptr;
    CLI::Option* sample_interval_opt = nullptr;
    CLI::Option* steps_per_second_opt = nullptr;
    CLI::Option* workers_opt = nullptr;
    CLI::Option* epsilon_opt = nullptr;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* pc_resolution_opt = nullptr;
    CLI::Option* ovc_resolution_opt = nullptr;
    CLI::Option* feedback_gain_opt = nullptr;
    CLI::Option* pc_tap_weight_opt = nullptr;
    CLI::Option* ovc_tap_weight_opt = nullptr;
    CLI::Option* normalize_desire_opt = nullptr;

    void attach(CLI::App* cmd, bool with_workers) {
        preset_opt = cmd->add_option("--preset", preset, "Preset architecture (A, B, C or D)");
        steps_opt = cmd->add_option("--steps", steps, "Steps per run");
        sample_interval_opt =
            cmd->add_option("--sample-interval", sample_interval, "Steps between trace samples");
        steps_per_second_opt = cmd->add_option("--steps-per-second", steps_per_second,
                                               "Wall-clock convention for the minutes column");
        if (with_workers) {
            workers_opt = cmd->add_option("--workers", workers, "Parallel trial workers");
        }
        epsilon_opt = cmd->add_option("--epsilon", epsilon, "Exploration rate");
        gamma_opt = cmd->add_option("--gamma", gamma, "Discount factor");
        alpha_opt = cmd->add_option("--alpha", alpha, "Learning rate");
        pc_resolution_opt = cmd->add_option("--pc-resolution", pc_resolution, "Coarse map cells per axis");
        ovc_resolution_opt =
            cmd->add_option("--ovc-resolution", ovc_resolution, "Fine map cells per axis");
        feedback_gain_opt =
            cmd->add_option("--feedback-gain", feedback_gain, "Recurrent desire gain (preset D)");
        pc_tap_weight_opt =
            cmd->add_option("--pc-tap-weight", pc_tap_weight, "Coarse map tap weight (preset C)");
        ovc_tap_weight_opt =
            cmd->add_option("--ovc-tap-weight", ovc_tap_weight, "Fine map tap weight");
        normalize_desire_opt = cmd->add_flag("--normalize-desire", normalize_desire,
                                             "Unit-length output displacements");
    }

    void apply(ExperimentConfig& config) const {
        if (preset_opt && preset_opt->count()) config.preset = preset;
        if (steps_opt && steps_opt->count()) config.steps = steps;
        if (sample_interval_opt && sample_interval_opt->count()) {
            config.sample_interval = sample_interval;
        }
        if (steps_per_second_opt && steps_per_second_opt->count()) {
            config.steps_per_second = steps_per_second;
        }
        if (workers_opt && workers_opt->count()) config.workers = workers;
        if (epsilon_opt && epsilon_opt->count()) config.overrides.epsilon = epsilon;
        if (gamma_opt && gamma_opt->count()) config.overrides.gamma = gamma;
        if (alpha_opt && alpha_opt->count()) config.overrides.alpha = alpha;
        if (pc_resolution_opt && pc_resolution_opt->count()) {
            config.overrides.pc_resolution = pc_resolution;
        }
        if (ovc_resolution_opt && ovc_resolution_opt->count()) {
            config.overrides.ovc_resolution = ovc_resolution;
        }
        if (feedback_gain_opt && feedback_gain_opt->count()) {
            config.overrides.feedback_gain = feedback_gain;
        }
        if (pc_tap_weight_opt && pc_tap_weight_opt->count()) {
            config.overrides.pc_tap_weight = pc_tap_weight;
        }
        if (ovc_tap_weight_opt && ovc_tap_weight_opt->count()) {
            config.overrides.ovc_tap_weight = ovc_tap_weight;
        }
        if (normalize_desire_opt && normalize_desire_opt->count()) {
            config.overrides.normalize_desire = normalize_desire;
        }
    }
};

ExperimentConfig base_config(const std::string& config_path) {
    if (config_path.empty()) return ExperimentConfig{};
    return load_config_file(config_path);
}

std::vector<std::string> split_presets(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    if (out.empty()) throw ConfigError("preset: empty preset list");
    return out;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("out: cannot write '" + path.string() + "'");
    return os;
}

void dump_banks(const Network& network, const fs::path& dir, const std::string& stem) {
    for (const NodeSpec& node : network.spec().nodes) {
        auto os = open_output(dir / (stem + "_bank_" + node.name + ".csv"));
        network.bank(node.name).dump_csv(os);
    }
}

int cmd_run(const ExperimentConfig& config, std::uint64_t seed, const std::string& out_dir,
            bool with_banks) {
    fs::create_directories(out_dir);
    ExperimentConfig single = config;
    single.seeds = {seed};
    single.validate();
    const TrialArtifacts artifacts = run_trial_full(single, seed);
    const std::string stem = "run_" + single.preset + "_seed" + std::to_string(seed);
    {
        auto os = open_output(fs::path(out_dir) / (stem + ".csv"));
        write_trace_csv(os, artifacts.trace, single.steps_per_second);
    }
    if (with_banks) dump_banks(artifacts.network, out_dir, stem);
    std::cout << "wrote " << (fs::path(out_dir) / (stem + ".csv")).string() << "\n";
    return kExitOk;
}

int cmd_batch(const ExperimentConfig& config, const std::vector<std::string>& presets,
              const std::string& out_dir, bool plot) {
    fs::create_directories(out_dir);
    std::vector<std::pair<std::string, AggregateCurve>> curves;
    for (const std::string& preset : presets) {
        ExperimentConfig cfg = config;
        cfg.preset = preset;
        cfg.validate();
        const BatchResult result = run_batch(cfg);
        for (const RewardTrace& trace : result.traces) {
            auto os = open_output(fs::path(out_dir) /
                                  ("run_" + preset + "_seed" + std::to_string(trace.seed) + ".csv"));
            write_trace_csv(os, trace, cfg.steps_per_second);
        }
        {
            auto os = open_output(fs::path(out_dir) / ("aggregate_" + preset + ".csv"));
            write_aggregate_csv(os, result.aggregate);
        }
        const auto& final = result.aggregate.samples.back();
        std::cout << "preset " << preset << ": n=" << final.n << " final mean "
                  << final.mean << " (stddev " << final.stddev << ")\n";
        curves.emplace_back(preset, result.aggregate);
    }
    if (curves.size() > 1) {
        auto os = open_output(fs::path(out_dir) / "comparison.csv");
        write_comparison_csv(os, curves);
    }
    if (plot) {
        auto os = open_output(fs::path(out_dir) / "curves.svg");
        write_curves_svg(os, curves);
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t seed) {
    const std::vector<CheckResult> results = run_verification_suites(seed);
    bool all_passed = true;
    std::size_t width = 0;
    for (const CheckResult& r : results) width = std::max(width, r.name.size());
    for (const CheckResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.passed) {
            std::cout << std::string(width - r.name.size() + 2, ' ') << r.detail;
            all_passed = false;
        }
        std::cout << "\n";
    }
    std::cout << (all_passed ? "all suites passed" : "verification FAILED") << "\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"purposive-network navigation experiments"};
    app.set_version_flag("--version", std::string("neorl ") + kVersion);
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);

    // run
    CLI::App* run = app.add_subcommand("run", "One seeded trial, per-run CSV");
    SharedFlags run_flags;
    run_flags.attach(run, false);
    std::uint64_t run_seed = 1;
    CLI::Option* run_seed_opt = run->add_option("--seed", run_seed, "Run seed");
    std::string run_out = "results";
    run->add_option("--out", run_out, "Output directory");
    bool run_dump_banks = false;
    run->add_flag("--dump-banks", run_dump_banks, "Also dump per-node bank tables");

    // batch
    CLI::App* batch = app.add_subcommand("batch", "Seeded batch per preset, aggregate CSVs");
    SharedFlags batch_flags;
    batch_flags.attach(batch, true);
    int batch_seeds = 0;
    CLI::Option* batch_seeds_opt =
        batch->add_option("--seeds", batch_seeds, "Number of seeds (expands to 1..N)");
    std::string batch_out = "results";
    batch->add_option("--out", batch_out, "Output directory");
    bool batch_plot = false;
    batch->add_flag("--plot", batch_plot, "Write an SVG chart of the mean curves");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Run the brute-force verification suites");
    std::uint64_t verify_seed = 20240101;
    verify->add_option("--seed", verify_seed, "Seed for the randomized suites");

    // describe
    CLI::App* describe = app.add_subcommand("describe", "Print the wiring of a network");
    SharedFlags describe_flags;
    describe_flags.attach(describe, false);

    // config dump
    CLI::App* config_cmd = app.add_subcommand("config", "Configuration utilities");
    config_cmd->require_subcommand(1);
    CLI::App* config_dump = config_cmd->add_subcommand("dump", "Print the effective configuration");
    SharedFlags dump_flags;
    dump_flags.attach(config_dump, true);
    int dump_seeds = 0;
    CLI::Option* dump_seeds_opt =
        config_dump->add_option("--seeds", dump_seeds, "Number of seeds (expands to 1..N)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            ExperimentConfig config = base_config(config_path);
            run_flags.apply(config);
            const std::uint64_t seed =
                run_seed_opt->count() ? run_seed : (config.seeds.empty() ? 1 : config.seeds[0]);
            return cmd_run(config, seed, run_out, run_dump_banks);
        }
        if (batch->parsed()) {
            ExperimentConfig config = base_config(config_path);
            batch_flags.apply(config);
            if (batch_seeds_opt->count()) {
                if (batch_seeds < 1) throw ConfigError("seeds: must be >= 1");
                config.seeds.clear();
                for (int s = 1; s <= batch_seeds; ++s) config.seeds.push_back(s);
            }
            return cmd_batch(config, split_presets(config.preset), batch_out, batch_plot);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_seed);
        }
        if (describe->parsed()) {
            ExperimentConfig config = base_config(config_path);
            describe_flags.apply(config);
            config.validate();
            std::cout << Network::build(config.network_spec()).describe();
            return kExitOk;
        }
        if (config_dump->parsed()) {
            ExperimentConfig config = base_config(config_path);
            dump_flags.apply(config);
            if (dump_seeds_opt->count()) {
                if (dump_seeds < 1) throw ConfigError("seeds: must be >= 1");
                config.seeds.clear();
                for (int s = 1; s <= dump_seeds; ++s) config.seeds.push_back(s);
            }
            config.validate();
            std::cout << dump_config_json(config);
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
