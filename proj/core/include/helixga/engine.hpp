#pragma once

#include "helixga/fitness.hpp"
#include "helixga/population.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace helixga {

class RandomSource;

enum class SelectionKind {
    kTournament,          // size-s tournament, ties won by the lower population index
    kFitnessProportional, // roulette over scores shifted to be non-negative
};

struct SelectionPolicy {
    SelectionKind kind = SelectionKind::kTournament;
    std::size_t tournament_size = 2;
};

/// Run parameters of the generational loop. Defaults reproduce the bundled
/// 30-chromosome, 20-bit, p = 0.03 reference configuration.
struct GaConfig {
    std::size_t population_size = 30;  // M
    std::size_t chromosome_length = 20; // N
    double mutation_rate = 0.03;        // p, per bit per generation
    double crossover_rate = 0.9;        // probability a selected pair is crossed
    std::size_t crossover_points = 1;   // distinct cut points per crossover
    SelectionPolicy selection;
    std::size_t elitism_count = 1;      // copied unchanged, exempt from mutation
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> max_epochs_override;
    double fraction_threshold = 0.5;    // aging stop level
};

struct ValidatedConfig {
    GaConfig config;
    /// Non-fatal findings, e.g. a mutation rate below 1/(M*N).
    std::vector<std::string> warnings;
};

/// Checks bounds and collects warnings. Throws std::invalid_argument on a
/// bound violation; a mutation rate below the minimum sensible limit 1/(M*N)
/// yields a warning quoting the computed limit, not an error.
ValidatedConfig validate_config(const GaConfig& cfg);

/// Stop levels derived from the mutation rate: maturity at ceil(1/(2p)) and
/// the hard cap at ceil(3/p) generations. With p = 0 the population never
/// ages, so an explicit epoch override is required instead.
struct StoppingPolicy {
    double fraction_threshold = 0.5;
    std::optional<std::uint64_t> maturity_epoch;
    std::optional<std::uint64_t> hard_cap_epoch; // ceil(3/p)
    std::optional<std::uint64_t> override_epoch;
    std::optional<double> target_fitness;

    static StoppingPolicy derive(const GaConfig& cfg, const FitnessFunction& fitness);
};

enum class StopReason {
    kTargetFitness,
    kFractionThreshold,
    kHardCap,
    kOverride,
};

std::string_view to_string(StopReason reason);

struct EpochRecord {
    std::uint64_t epoch = 0;
    double mutated_fraction = 0.0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    std::uint64_t evaluations = 0; // cumulative fitness evaluations so far
};

/// Full account of one run: the per-epoch aging trace, why it stopped, and
/// the exact evaluation budget. Epoch 0 is the evaluated initial population,
/// so a run stopped after G generations costs (G+1) * M evaluations.
struct AgingReport {
    std::vector<EpochRecord> records;
    StopReason stop_reason = StopReason::kHardCap;
    std::optional<std::uint64_t> first_passage_epoch;
    std::optional<std::uint64_t> maturity_epoch;
    std::optional<std::uint64_t> hard_cap_epoch;
    std::uint64_t total_evaluations = 0;
    std::size_t population_size = 0;
    std::optional<BitStrand> best_visible; // best-scoring strand seen anywhere in the run
    double best_fitness = 0.0;

    std::uint64_t stop_epoch() const { return records.empty() ? 0 : records.back().epoch; }
    /// Evaluations excluding the initial population, i.e. generations * M.
    std::uint64_t evaluations_after_initial() const {
        return total_evaluations - population_size;
    }
};

/// M chromosomes with uniformly random visible strands; every invisible
/// strand starts as the exact complement, so the mutated fraction is 0.
Population initialize_population(const GaConfig& cfg, RandomSource& rng);

/// One generational cycle using precomputed fitness scores for `pop`
/// (scores[i] belongs to member i): copy elites, select parents, cross with
/// probability crossover_rate at crossover_points distinct cuts, mutate every
/// non-elite child at rate p. Performs no fitness evaluations itself.
Population step_generation(const Population& pop, std::span<const double> scores,
                           const GaConfig& cfg, RandomSource& rng);

/// Convenience overload that first evaluates `fitness` on all M members.
Population step_generation(const Population& pop, const GaConfig& cfg,
                           const FitnessFunction& fitness, RandomSource& rng);

/// The generational loop with aging-based stopping. Each epoch the mutated
/// fraction is computed once and the stop criteria are checked in fixed
/// order: target fitness, fraction threshold, hard cap, override. Identical
/// config and seed produce an identical report.
AgingReport run(const GaConfig& cfg, const FitnessFunction& fitness);

} // namespace helixga
