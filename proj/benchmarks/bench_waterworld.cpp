#include <benchmark/benchmark.h>

#include "neorl/rng.hpp"
#include "neorl/waterworld.hpp"

using namespace neorl;

namespace {

void BM_EnvStep(benchmark::State& state) {
    WaterWorld env(EnvParams{}, 7);
    Rng rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(env.step(kActions[uniform_int(rng, 4)]));
    }
}
BENCHMARK(BM_EnvStep);

void BM_Observe(benchmark::State& state) {
    const WaterWorld env(EnvParams{}, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(env.observe());
    }
}
BENCHMARK(BM_Observe);

}  // namespace

BENCHMARK_MAIN();
