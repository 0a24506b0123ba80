#include <benchmark/benchmark.h>

#include "neorl/harness.hpp"
#include "neorl/network.hpp"
#include "neorl/presets.hpp"
#include "neorl/waterworld.hpp"

using namespace neorl;

namespace {

// One full agent-environment step (tick, env step, learn) in steady state.
void BM_AgentStep(benchmark::State& state) {
    const Preset preset = static_cast<Preset>(state.range(0));
    WaterWorld env(EnvParams{}, 11);
    Network net = Network::build(make_preset(preset));
    Rng policy(11);
    Observation obs = env.observe();
    for (auto _ : state) {
        const TickResult tick = net.tick(obs, policy);
        env.step(tick.action);
        const Observation next = env.observe();
        net.learn(obs, tick.action, next);
        obs = next;
    }
    state.SetLabel(preset_name(preset));
}
BENCHMARK(BM_AgentStep)->DenseRange(0, 3);

void BM_Trial3000(benchmark::State& state) {
    ExperimentConfig config;
    config.preset = "D";
    config.steps = 3000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(config, 1));
    }
    state.SetItemsProcessed(state.iterations() * config.steps);
}
BENCHMARK(BM_Trial3000)->Unit(benchmark::kMillisecond);

}  // namespace
