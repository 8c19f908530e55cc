#include <benchmark/benchmark.h>

#include "apskit/constellation.hpp"
#include "apskit/geometry.hpp"

using namespace apskit;

static void BM_MinDistanceStructured(benchmark::State& state) {
    const Constellation c = build_prop1_family(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(c, *c.design));
    }
}
BENCHMARK(BM_MinDistanceStructured)->Arg(6)->Arg(8)->Arg(10);

static void BM_MinDistanceBruteForce(benchmark::State& state) {
    const Constellation c = build_prop1_family(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_dmin(c));
    }
}
BENCHMARK(BM_MinDistanceBruteForce)->Arg(6)->Arg(8)->Arg(10);

static void BM_DminFromDeltaReuse(benchmark::State& state) {
    // the radius-sweep path: offsets computed once, radii vary per call
    const Constellation c = build_prop1_family(static_cast<int>(state.range(0)), 2);
    const auto delta = delta_matrix(*c.design);
    std::vector<double> radii = c.ring_radii;
    for (auto _ : state) {
        radii[0] *= 1.0000001;
        benchmark::DoNotOptimize(dmin_from_delta(radii, c.design->ring_counts, delta));
    }
}
BENCHMARK(BM_DminFromDeltaReuse)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
