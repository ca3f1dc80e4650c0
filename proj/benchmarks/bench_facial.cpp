#include <benchmark/benchmark.h>

#include "chroma/facial.hpp"
#include "chroma/generators.hpp"

using namespace chroma;

static void BM_BuildTriangulation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PlaneGraph g = random_plane_graph(n, 7, 1.0);
        benchmark::DoNotOptimize(g.face_count());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BuildTriangulation)->Range(64, 4096)->Complexity();

static void BM_FacialAdjacency(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PlaneGraph g = random_plane_graph(n, 11, 0.85);
    for (auto _ : state) {
        FacialAdjacency adj = facial_adjacency_graph(g, 3);
        benchmark::DoNotOptimize(adj.neighbors.size());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_FacialAdjacency)->Range(64, 4096)->Complexity();
