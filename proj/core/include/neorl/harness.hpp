#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neorl/presets.hpp"
#include "neorl/waterworld.hpp"

namespace neorl {

// Optional constant overrides layered on top of a preset.
struct Overrides {
    std::optional<double> gamma;
    std::optional<double> alpha;
    std::optional<double> epsilon;
    std::optional<double> feedback_gain;
    std::optional<double> pc_tap_weight;
    std::optional<double> ovc_tap_weight;
    std::optional<int> pc_resolution;
    std::optional<int> ovc_resolution;
    std::optional<bool> normalize_desire;
    friend bool operator==(const Overrides&, const Overrides&) = default;
};

// The default desk-scale batch: 20 seeds, 36000 steps (20 nominal minutes).
inline std::vector<std::uint64_t> default_seeds(int count = 20) {
    std::vector<std::uint64_t> seeds(count);
    for (int i = 0; i < count; ++i) seeds[i] = static_cast<std::uint64_t>(i + 1);
    return seeds;
}

struct ExperimentConfig {
    std::string preset = "A";      // A, B, C, D, or "custom"
    NetworkSpec custom_network;    // used when preset == "custom"
    EnvParams env;
    long steps = 36000;
    std::vector<std::uint64_t> seeds = default_seeds();
    int sample_interval = 300;
    int steps_per_second = 30;
    int workers = 1;
    Overrides overrides;

    // Throws ConfigError on violations (steps < 1, empty or duplicate seeds,
    // bad env params, ...).
    void validate() const;

    // The network wiring this config runs: the preset expanded with the
    // overrides, or the custom spec. Bounds always follow the env arena.
    NetworkSpec network_spec() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct TraceSample {
    long step;
    double accumulated_reward;
    friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

struct RewardTrace {
    std::uint64_t seed = 0;
    std::vector<TraceSample> samples;
    friend bool operator==(const RewardTrace&, const RewardTrace&) = default;
};

struct AggregateSample {
    long step;
    double minutes;
    double mean;
    double stddev;  // population, so a single seed gives 0
    int n;
    friend bool operator==(const AggregateSample&, const AggregateSample&) = default;
};

struct AggregateCurve {
    std::vector<AggregateSample> samples;
    friend bool operator==(const AggregateCurve&, const AggregateCurve&) = default;
};

struct BatchResult {
    AggregateCurve aggregate;
    std::vector<RewardTrace> traces;  // sorted by seed
};

// Wall-clock position of a step under the steps-per-second convention.
inline double to_minutes(long step, int steps_per_second = 30) {
    return static_cast<double>(step) / (static_cast<double>(steps_per_second) * 60.0);
}

// One seeded run: fresh environment, fresh zero-initialized network, no
// pre-training. The environment and policy generators are split from the
// seed with fixed labels, so different presets see identical worlds under
// the same seed.
RewardTrace run_trial(const ExperimentConfig& config, std::uint64_t seed);

// Same run, but also hands back the trained network (bank inspection, dumps).
struct TrialArtifacts {
    RewardTrace trace;
    Network network;
};
TrialArtifacts run_trial_full(const ExperimentConfig& config, std::uint64_t seed);

// All seeds, optionally in parallel; aggregation is a sequential reduce over
// traces sorted by seed, so the result is identical for any worker count or
// seed order.
BatchResult run_batch(const ExperimentConfig& config);

AggregateCurve aggregate_traces(std::vector<RewardTrace> traces, int steps_per_second);

// CSV emission. Headers are mandatory; numbers are locale-independent.
void write_trace_csv(std::ostream& os, const RewardTrace& trace, int steps_per_second);
void write_aggregate_csv(std::ostream& os, const AggregateCurve& curve);
void write_comparison_csv(std::ostream& os,
                          const std::vector<std::pair<std::string, AggregateCurve>>& curves);

}  // namespace neorl
