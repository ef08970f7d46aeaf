#include <benchmark/benchmark.h>

#include "helixga/dynamics.hpp"
#include "helixga/engine.hpp"
#include "helixga/rng.hpp"

using namespace helixga;

static void bench_iterate(benchmark::State& state) {
    const auto epochs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate({0.03, 0.0}, epochs));
    }
}
BENCHMARK(bench_iterate)->Arg(100)->Arg(10000);

static void bench_simulate_flip_fraction(benchmark::State& state) {
    const auto trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        RandomSource rng(7);
        benchmark::DoNotOptimize(simulate_flip_fraction(600, 0.03, 100, trials, rng, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 600 * 100);
}
BENCHMARK(bench_simulate_flip_fraction)->Arg(1)->Arg(16);

static void bench_engine_generation(benchmark::State& state) {
    GaConfig cfg;
    cfg.population_size = 30;
    cfg.chromosome_length = 20;
    cfg.mutation_rate = 0.03;
    RandomSource rng(8);
    Population pop = initialize_population(cfg, rng);
    const std::vector<double> scores(30, 1.0);
    for (auto _ : state) {
        pop = step_generation(pop, scores, cfg, rng);
        benchmark::DoNotOptimize(pop);
    }
}
BENCHMARK(bench_engine_generation);

static void bench_engine_run_reference(benchmark::State& state) {
    GaConfig cfg;
    cfg.population_size = 30;
    cfg.chromosome_length = 20;
    cfg.mutation_rate = 0.03;
    cfg.max_epochs_override = 20;
    const auto onemax = builtin_fitness("onemax");
    for (auto _ : state) {
        cfg.seed += 1;
        benchmark::DoNotOptimize(run(cfg, onemax));
    }
}
BENCHMARK(bench_engine_run_reference);

BENCHMARK_MAIN();
