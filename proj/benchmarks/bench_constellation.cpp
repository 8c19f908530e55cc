#include <benchmark/benchmark.h>

#include "apskit/constellation.hpp"

using namespace apskit;

static void BM_BuildTradeoff(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    TradeoffParams p;
    p.m = m;
    p.alpha = 2;
    p.b = 0.5;
    p.c = 0.25;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_tradeoff_family(p));
    }
    state.SetItemsProcessed(state.iterations() * (1 << m));
}
BENCHMARK(BM_BuildTradeoff)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_BuildPsk(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_psk(m));
    }
    state.SetItemsProcessed(state.iterations() * (1 << m));
}
BENCHMARK(BM_BuildPsk)->Arg(6)->Arg(10);

static void BM_BuildQam(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_qam(m));
    }
    state.SetItemsProcessed(state.iterations() * (1 << m));
}
BENCHMARK(BM_BuildQam)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
