#include <benchmark/benchmark.h>

#include "helixga/rng.hpp"
#include "helixga/smallworld.hpp"

using namespace helixga;

static void bench_greedy_cover(benchmark::State& state) {
    const auto dimension = static_cast<unsigned>(state.range(0));
    const Hypercube cube(dimension);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_cover(cube));
    }
}
BENCHMARK(bench_greedy_cover)->Arg(8)->Arg(12)->Arg(16);

static void bench_is_dominating(benchmark::State& state) {
    const Hypercube cube(16);
    const auto cover = greedy_cover(cube);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_dominating(cube, cover.subset));
    }
}
BENCHMARK(bench_is_dominating);

static void bench_exhaustive_minimum(benchmark::State& state) {
    const Hypercube cube(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimum_dominating_sets(cube));
    }
}
BENCHMARK(bench_exhaustive_minimum)->Arg(3)->Arg(4);

static void bench_average_pairwise_distance(benchmark::State& state) {
    const Hypercube cube(16);
    RandomSource rng(9);
    std::vector<Vertex> sample;
    for (int i = 0; i < 1000; ++i) {
        sample.push_back(static_cast<Vertex>(rng.below(cube.vertex_count())));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(average_pairwise_distance(cube, sample));
    }
}
BENCHMARK(bench_average_pairwise_distance);

BENCHMARK_MAIN();
