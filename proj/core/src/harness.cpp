#include "neorl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <string>
#include <thread>

#include "neorl/csv.hpp"
#include "neorl/errors.hpp"
#include "neorl/network.hpp"

namespace neorl {

void ExperimentConfig::validate() const {
    env.validate();
    if (steps < 1) throw ConfigError("steps: must be >= 1");
    if (seeds.empty()) throw ConfigError("seeds: must be non-empty");
    std::set<std::uint64_t> distinct(seeds.begin(), seeds.end());
    if (distinct.size() != seeds.size()) throw ConfigError("seeds: must be distinct");
    if (sample_interval < 1) throw ConfigError("sample_interval: must be >= 1");
    if (steps_per_second < 1) throw ConfigError("steps_per_second: must be >= 1");
    if (workers < 1) throw ConfigError("workers: must be >= 1");
    if (preset != "custom") parse_preset(preset);
    network_spec();  // surfaces wiring errors at config time
}

NetworkSpec ExperimentConfig::network_spec() const {
    if (preset == "custom") {
        NetworkSpec spec = custom_network;
        spec.bounds = env.arena();
        if (overrides.epsilon) spec.epsilon = *overrides.epsilon;
        if (overrides.normalize_desire) spec.normalize_desire = *overrides.normalize_desire;
        Network::build(spec);  // validate
        return spec;
    }
    PresetParams pp;
    pp.bounds = env.arena();
    if (overrides.gamma) pp.gamma = *overrides.gamma;
    if (overrides.alpha) pp.alpha = *overrides.alpha;
    if (overrides.epsilon) pp.epsilon = *overrides.epsilon;
    if (overrides.feedback_gain) pp.feedback_gain = *overrides.feedback_gain;
    if (overrides.pc_tap_weight) pp.pc_tap_weight = *overrides.pc_tap_weight;
    if (overrides.ovc_tap_weight) pp.ovc_tap_weight = *overrides.ovc_tap_weight;
    if (overrides.pc_resolution) pp.pc_resolution = *overrides.pc_resolution;
    if (overrides.ovc_resolution) pp.ovc_resolution = *overrides.ovc_resolution;
    if (overrides.normalize_desire) pp.normalize_desire = *overrides.normalize_desire;
    return make_preset(parse_preset(preset), pp);
}

TrialArtifacts run_trial_full(const ExperimentConfig& config, std::uint64_t seed) {
    config.env.validate();
    if (config.steps < 1) throw ConfigError("steps: must be >= 1");

    WaterWorld env(config.env, mix_seed(seed, "env"));
    Network net = Network::build(config.network_spec());
    Rng policy = make_stream(seed, "policy");

    RewardTrace trace;
    trace.seed = seed;
    trace.samples.reserve(config.steps / config.sample_interval + 1);

    Observation obs = env.observe();
    double accumulated = 0.0;
    for (long step = 1; step <= config.steps; ++step) {
        const TickResult tick = net.tick(obs, policy);
        const StepOutcome outcome = env.step(tick.action);
        const Observation next = env.observe();
        net.learn(obs, tick.action, next);
        accumulated += outcome.reward;
        if (step % config.sample_interval == 0) {
            trace.samples.push_back({step, accumulated});
        }
        obs = next;
    }
    return {std::move(trace), std::move(net)};
}

RewardTrace run_trial(const ExperimentConfig& config, std::uint64_t seed) {
    return run_trial_full(config, seed).trace;
}

BatchResult run_batch(const ExperimentConfig& config) {
    config.validate();

    std::vector<RewardTrace> traces(config.seeds.size());
    const int workers =
        std::min<int>(config.workers, static_cast<int>(config.seeds.size()));

    if (workers <= 1) {
        for (std::size_t i = 0; i < config.seeds.size(); ++i) {
            traces[i] = run_trial(config, config.seeds[i]);
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= config.seeds.size()) return;
                    try {
                        traces[i] = run_trial(config, config.seeds[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    BatchResult result;
    result.traces = std::move(traces);
    result.aggregate = aggregate_traces(result.traces, config.steps_per_second);
    std::sort(result.traces.begin(), result.traces.end(),
              [](const RewardTrace& a, const RewardTrace& b) { return a.seed < b.seed; });
    return result;
}

AggregateCurve aggregate_traces(std::vector<RewardTrace> traces, int steps_per_second) {
    if (traces.empty()) throw ConfigError("aggregate: at least one trace is required");
    std::sort(traces.begin(), traces.end(),
              [](const RewardTrace& a, const RewardTrace& b) { return a.seed < b.seed; });
    const std::size_t samples = traces.front().samples.size();
    for (const RewardTrace& t : traces) {
        if (t.samples.size() != samples) {
            throw ConfigError("aggregate: traces have mismatched sampling");
        }
    }
    AggregateCurve curve;
    curve.samples.reserve(samples);
    const int n = static_cast<int>(traces.size());
    for (std::size_t k = 0; k < samples; ++k) {
        const long step = traces.front().samples[k].step;
        double mean = 0.0;
        for (const RewardTrace& t : traces) {
            mean += t.samples[k].accumulated_reward;
        }
        mean /= n;
        double var = 0.0;
        for (const RewardTrace& t : traces) {
            const double d = t.samples[k].accumulated_reward - mean;
            var += d * d;
        }
        var /= n;
        curve.samples.push_back({step, to_minutes(step, steps_per_second), mean, std::sqrt(var), n});
    }
    return curve;
}

void write_trace_csv(std::ostream& os, const RewardTrace& trace, int steps_per_second) {
    os << "run_id,step,minutes,accumulated_reward\n";
    for (const TraceSample& s : trace.samples) {
        os << trace.seed << ',' << s.step << ',' << format_double(to_minutes(s.step, steps_per_second))
           << ',' << format_double(s.accumulated_reward) << '\n';
    }
}

void write_aggregate_csv(std::ostream& os, const AggregateCurve& curve) {
    os << "step,minutes,mean,stddev,n\n";
    for (const AggregateSample& s : curve.samples) {
        os << s.step << ',' << format_double(s.minutes) << ',' << format_double(s.mean) << ','
           << format_double(s.stddev) << ',' << s.n << '\n';
    }
}

void write_comparison_csv(std::ostream& os,
                          const std::vector<std::pair<std::string, AggregateCurve>>& curves) {
    if (curves.empty()) return;
    os << "step,minutes";
    for (const auto& [name, curve] : curves) {
        os << ',' << name << "_mean," << name << "_stddev";
    }
    os << '\n';
    const std::size_t rows = curves.front().second.samples.size();
    for (const auto& [name, curve] : curves) {
        if (curve.samples.size() != rows) {
            throw ConfigError("comparison: curves have mismatched sampling");
        }
    }
    for (std::size_t k = 0; k < rows; ++k) {
        const AggregateSample& lead = curves.front().second.samples[k];
        os << lead.step << ',' << format_double(lead.minutes);
        for (const auto& [name, curve] : curves) {
            os << ',' << format_double(curve.samples[k].mean) << ','
               << format_double(curve.samples[k].stddev);
        }
        os << '\n';
    }
}

}  // namespace neorl
