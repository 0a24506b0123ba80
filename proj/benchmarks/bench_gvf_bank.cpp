#include <benchmark/benchmark.h>

#include "neorl/gvf_bank.hpp"
#include "neorl/rng.hpp"

using namespace neorl;

namespace {

const Rect kUnit{{0.0, 0.0}, {1.0, 1.0}};

void BM_UpdateAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GvfBank bank(NresGrid(n, kUnit), 0.95, 0.1);
    Rng rng(1);
    const CellIndex cells = static_cast<CellIndex>(bank.grid().cell_count());
    for (auto _ : state) {
        bank.update_all({static_cast<CellIndex>(uniform_int(rng, cells)),
                         kActions[uniform_int(rng, 4)],
                         static_cast<CellIndex>(uniform_int(rng, cells))});
    }
    state.SetItemsProcessed(state.iterations() * bank.grid().cell_count());
}
BENCHMARK(BM_UpdateAll)->Arg(7)->Arg(15)->Arg(23);

void BM_QSlice(benchmark::State& state) {
    GvfBank bank(NresGrid(23, kUnit), 0.95, 0.1);
    Rng rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bank.q_slice(static_cast<CellIndex>(uniform_int(rng, 529)),
                                              static_cast<CellIndex>(uniform_int(rng, 529))));
    }
}
BENCHMARK(BM_QSlice);

}  // namespace
