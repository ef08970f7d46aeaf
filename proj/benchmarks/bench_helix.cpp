#include <benchmark/benchmark.h>

#include "helixga/chromosome.hpp"
#include "helixga/population.hpp"
#include "helixga/rng.hpp"

using namespace helixga;

static void bench_mutate_bernoulli(benchmark::State& state) {
    const auto length = static_cast<std::size_t>(state.range(0));
    RandomSource rng(1);
    auto chrom = DoubleHelixChromosome::from_visible(BitStrand::random(length, rng));
    for (auto _ : state) {
        chrom = mutate_bernoulli(chrom, 0.03, rng);
        benchmark::DoNotOptimize(chrom);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(length));
}
BENCHMARK(bench_mutate_bernoulli)->Arg(20)->Arg(256)->Arg(4096);

static void bench_mutated_count(benchmark::State& state) {
    const auto length = static_cast<std::size_t>(state.range(0));
    RandomSource rng(2);
    auto chrom = mutate_bernoulli(
        DoubleHelixChromosome::from_visible(BitStrand::random(length, rng)), 0.1, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chrom.effectively_mutated_count());
    }
}
BENCHMARK(bench_mutated_count)->Arg(20)->Arg(4096);

static void bench_crossover_one_point(benchmark::State& state) {
    const auto length = static_cast<std::size_t>(state.range(0));
    RandomSource rng(3);
    const auto a = DoubleHelixChromosome::from_visible(BitStrand::random(length, rng));
    const auto b = DoubleHelixChromosome::from_visible(BitStrand::random(length, rng));
    const std::size_t cuts[] = {length / 2};
    for (auto _ : state) {
        auto children = crossover(a, b, cuts);
        benchmark::DoNotOptimize(children);
    }
}
BENCHMARK(bench_crossover_one_point)->Arg(20)->Arg(256);

static void bench_population_fraction(benchmark::State& state) {
    RandomSource rng(4);
    std::vector<DoubleHelixChromosome> members;
    for (int i = 0; i < 30; ++i) {
        members.push_back(DoubleHelixChromosome::from_visible(BitStrand::random(20, rng)));
    }
    const Population pop(members);
    for (auto _ : state) {
        benchmark::DoNotOptimize(population_mutated_fraction(pop));
    }
}
BENCHMARK(bench_population_fraction);

BENCHMARK_MAIN();
