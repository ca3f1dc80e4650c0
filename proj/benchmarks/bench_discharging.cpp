#include <benchmark/benchmark.h>

#include "chroma/discharging.hpp"
#include "chroma/generators.hpp"
#include "chroma/structure.hpp"

using namespace chroma;

static void BM_Discharge(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PlaneGraph g = random_plane_graph(n, 17, 0.8);
    for (auto _ : state) {
        ChargeLedger ledger = apply_rules(g, initial_charges(g));
        benchmark::DoNotOptimize(ledger.transfers.size());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Discharge)->Range(64, 2048)->Complexity();

static void BM_Classify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PlaneGraph g = random_plane_graph(n, 23, 0.8);
    for (auto _ : state) {
        Classification cls = classify(g);
        benchmark::DoNotOptimize(cls.face_counts.size());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Classify)->Range(64, 2048)->Complexity();

static void BM_MinimalityScan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PlaneGraph g = random_plane_graph(n, 29, 0.85);
    for (auto _ : state) {
        auto witnesses = minimality_witnesses(g);
        benchmark::DoNotOptimize(witnesses.size());
    }
}
BENCHMARK(BM_MinimalityScan)->DenseRange(8, 24, 8);

BENCHMARK_MAIN();
