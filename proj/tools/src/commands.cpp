#include "commands.hpp"

#include "helixga/csv.hpp"
#include "helixga/dynamics.hpp"
#include "helixga/rng.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

namespace helixga::cli {

namespace {

// Per-subcommand stream tags; every draw in the process derives from the one
// master seed through these.
enum StreamTag : std::uint64_t {
    kRunStream = 1,
    kSimulateStream = 3,
    kCoverStream = 4,
};

std::string num(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string opt_num(const std::optional<std::uint64_t>& value) {
    return value ? std::to_string(*value) : std::string("none");
}

void ensure_output_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                                 ec.message());
    }
}

} // namespace

int cmd_run(const Manifest& manifest) {
    ensure_output_dir(manifest.output_dir);

    GaConfig cfg = ga_config(manifest.config, derive_seed(manifest.seed, kRunStream));
    const FitnessFunction fitness = fitness_function(manifest.config, cfg);

    ValidatedConfig validated = [&] {
        try {
            return validate_config(cfg);
        } catch (const std::invalid_argument& error) {
            throw ConfigError("ga", error.what());
        }
    }();
    for (const auto& warning : validated.warnings) {
        std::cerr << "warning: " << warning << '\n';
    }

    const AgingReport report = run(cfg, fitness);
    write_aging_csv(manifest.output_dir / "run_report.csv",
                    manifest.output_dir / "run_summary.csv", report);

    const auto n_bits = static_cast<std::uint64_t>(cfg.population_size) * cfg.chromosome_length;
    std::cout << "subcommand=run"
              << " stop_reason=" << to_string(report.stop_reason)
              << " stop_epoch=" << report.stop_epoch()
              << " best_fitness=" << num(report.best_fitness)
              << " first_passage=" << opt_num(report.first_passage_epoch)
              << " maturity=" << opt_num(report.maturity_epoch)
              << " hard_cap=" << opt_num(report.hard_cap_epoch)
              << " min_rate=" << num(min_mutation_rate(n_bits))
              << " evaluations=" << report.total_evaluations
              << " post_init_evaluations=" << report.evaluations_after_initial() << '\n';
    return 0;
}

int cmd_dynamics(const Manifest& manifest) {
    ensure_output_dir(manifest.output_dir);

    const DynamicsOptions opts = dynamics_options(manifest.config);
    const DynamicsConfig config{opts.p, opts.p0};
    const Trajectory trajectory = iterate(config, opts.epochs);
    write_theory_csv(manifest.output_dir / "dynamics_theory.csv", trajectory);

    const auto limit = limit_of(config);
    std::cout << "subcommand=dynamics"
              << " p=" << num(opts.p)
              << " p0=" << num(opts.p0)
              << " epochs=" << opts.epochs
              << " class=" << to_string(classify(config))
              << " limit=" << (limit ? num(*limit) : std::string("none"))
              << " final=" << num(trajectory.values.back()) << '\n';
    return 0;
}

int cmd_simulate(const Manifest& manifest) {
    ensure_output_dir(manifest.output_dir);

    const SimulateOptions opts = simulate_options(manifest.config);
    RandomSource rng(derive_seed(manifest.seed, kSimulateStream));
    const FlipSimulationResult result = simulate_flip_fraction(
        opts.n_bits, opts.p, opts.epochs, opts.trials, rng, opts.threads);
    write_simulation_csv(manifest.output_dir / "simulate_fraction.csv",
                         manifest.output_dir / "simulate_first_passage.csv", result);

    const auto median = result.median_first_passage();
    const auto q25 = result.first_passage_quartile(0.25);
    const auto q75 = result.first_passage_quartile(0.75);

    std::cout << "subcommand=simulate"
              << " n_bits=" << opts.n_bits
              << " p=" << num(opts.p)
              << " epochs=" << opts.epochs
              << " trials=" << opts.trials
              << " passed=" << result.passage_count()
              << " median_first_passage=" << (median ? num(*median) : std::string("none"))
              << " q25=" << (q25 ? num(*q25) : std::string("none"))
              << " q75=" << (q75 ? num(*q75) : std::string("none"));

    if (opts.p > 0.0 && median) {
        // The observed five-to-six-maturities window for the first passage.
        const std::uint64_t window_lo = static_cast<std::uint64_t>(std::floor(2.5 / opts.p));
        const std::uint64_t window_hi = static_cast<std::uint64_t>(std::ceil(3.0 / opts.p));
        const bool overlap = *q25 <= static_cast<double>(window_hi) &&
                             static_cast<double>(window_lo) <= *q75;
        std::cout << " expected_window=[" << window_lo << ',' << window_hi << ']'
                  << " window_overlap=" << (overlap ? "true" : "false");
        std::cout << '\n';
        if (!overlap) {
            std::cout << "note: observed first-passage interquartile range [" << num(*q25) << ','
                      << num(*q75) << "] does not intersect the five-to-six-maturities window ["
                      << window_lo << ',' << window_hi
                      << "]; that window is an empirical observation, not a theorem\n";
        }
    } else {
        std::cout << '\n';
    }
    return 0;
}

int cmd_cover(const Manifest& manifest) {
    ensure_output_dir(manifest.output_dir);

    const CoverOptions opts = cover_options(manifest.config);
    const Hypercube cube(opts.dimension);
    const auto csv_path = manifest.output_dir / "cover.csv";

    if (opts.method == CoverMethod::kExhaustive) {
        const MinimumCoverSearch search = [&] {
            try {
                return minimum_dominating_sets(cube);
            } catch (const std::domain_error& error) {
                throw ConfigError("cover.dimension", error.what());
            }
        }();
        std::vector<CoverResult> results;
        results.reserve(search.subsets.size());
        for (const auto& subset : search.subsets) {
            results.push_back(
                {subset, subset.size(), is_dominating(cube, subset), CoverMethod::kExhaustive,
                 true});
        }
        write_cover_csv(csv_path, cube, results);
        std::cout << "subcommand=cover method=exhaustive dimension=" << opts.dimension
                  << " size=" << search.size << " minimum_sets=" << search.subsets.size()
                  << " is_cover=true optimal=true\n";
        return 0;
    }

    if (opts.method == CoverMethod::kGreedy) {
        const CoverResult result = greedy_cover(cube);
        write_cover_csv(csv_path, cube, std::span(&result, 1));
        std::cout << "subcommand=cover method=greedy dimension=" << opts.dimension
                  << " size=" << result.size
                  << " is_cover=" << (result.is_cover ? "true" : "false") << '\n';
        return 0;
    }

    GaConfig cfg = ga_config(manifest.config, derive_seed(manifest.seed, kCoverStream));
    const CoverResult result = ga_cover(cube, opts.subset_size, cfg);
    write_cover_csv(csv_path, cube, std::span(&result, 1));
    std::cout << "subcommand=cover method=ga dimension=" << opts.dimension
              << " subset_size=" << opts.subset_size
              << " covered=" << covered_count(cube, result.subset) << '/' << cube.vertex_count()
              << " is_cover=" << (result.is_cover ? "true" : "false") << '\n';
    return 0;
}

} // namespace helixga::cli
