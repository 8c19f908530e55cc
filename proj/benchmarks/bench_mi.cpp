#include <benchmark/benchmark.h>

#include "apskit/comm.hpp"
#include "apskit/constellation.hpp"
#include "apskit/sensing.hpp"

using namespace apskit;

static void BM_EstimateMi(benchmark::State& state) {
    const Constellation c = build_prop1_family(static_cast<int>(state.range(0)), 2);
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    const long n = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_mi(c, ch, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EstimateMi)
    ->Args({4, 10000})
    ->Args({6, 10000})
    ->Args({8, 10000})
    ->Args({6, 100000});

static void BM_AvgCrbMonteCarlo(benchmark::State& state) {
    const Constellation c = build_prop1_family(6, 2);
    SensingSpec s;
    s.block_len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(avg_crb_monte_carlo(c, s, 10000, 1));
    }
    state.SetItemsProcessed(state.iterations() * 10000 * state.range(0));
}
BENCHMARK(BM_AvgCrbMonteCarlo)->Arg(8)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
