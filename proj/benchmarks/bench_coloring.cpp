#include <benchmark/benchmark.h>

#include <numeric>

#include "chroma/coloring.hpp"
#include "chroma/generators.hpp"

using namespace chroma;

static void BM_ExactChromaticTight(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    PlaneGraph g = tight_example(l);
    for (auto _ : state) {
        ChromaticResult result = exact_chromatic(g, l);
        benchmark::DoNotOptimize(result.chromatic_number);
    }
}
BENCHMARK(BM_ExactChromaticTight)->DenseRange(1, 4);

static void BM_ExactChromaticRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PlaneGraph g = random_plane_graph(n, 3, 0.9);
    for (auto _ : state) {
        ChromaticResult result = exact_chromatic(g, 3);
        benchmark::DoNotOptimize(result.chromatic_number);
    }
}
BENCHMARK(BM_ExactChromaticRandom)->DenseRange(8, 20, 4);

static void BM_GreedyColorRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PlaneGraph g = random_plane_graph(n, 3, 0.9);
    std::vector<VertexId> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    for (auto _ : state) {
        GreedyResult result = greedy_color(g, 3, 11, order);
        benchmark::DoNotOptimize(result.coloring.color.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_GreedyColorRandom)->Range(64, 1024)->Complexity();
