#include "helixga/engine.hpp"

#include "helixga/dynamics.hpp"
#include "helixga/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace helixga {

namespace {

std::string format_rate(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

} // namespace

ValidatedConfig validate_config(const GaConfig& cfg) {
    if (cfg.population_size < 2) {
        throw std::invalid_argument("GaConfig: population_size must be >= 2");
    }
    if (cfg.chromosome_length < 1) {
        throw std::invalid_argument("GaConfig: chromosome_length must be >= 1");
    }
    if (!(cfg.mutation_rate >= 0.0 && cfg.mutation_rate <= 1.0)) {
        throw std::invalid_argument("GaConfig: mutation_rate must be in [0,1]");
    }
    if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
        throw std::invalid_argument("GaConfig: crossover_rate must be in [0,1]");
    }
    if (cfg.crossover_points < 1) {
        throw std::invalid_argument("GaConfig: crossover_points must be >= 1");
    }
    if (cfg.crossover_rate > 0.0 && cfg.crossover_points > cfg.chromosome_length - 1) {
        throw std::invalid_argument(
            "GaConfig: crossover_points must be <= chromosome_length - 1");
    }
    if (cfg.elitism_count > cfg.population_size) {
        throw std::invalid_argument("GaConfig: elitism_count must be <= population_size");
    }
    if (cfg.selection.kind == SelectionKind::kTournament && cfg.selection.tournament_size < 1) {
        throw std::invalid_argument("GaConfig: tournament_size must be >= 1");
    }
    if (!(cfg.fraction_threshold > 0.0 && cfg.fraction_threshold <= 1.0)) {
        throw std::invalid_argument("GaConfig: fraction_threshold must be in (0,1]");
    }

    ValidatedConfig validated{cfg, {}};
    const std::uint64_t n_bits =
        static_cast<std::uint64_t>(cfg.population_size) * cfg.chromosome_length;
    const double lowest = min_mutation_rate(n_bits);
    if (cfg.mutation_rate < lowest) {
        validated.warnings.push_back(
            "mutation_rate " + format_rate(cfg.mutation_rate) +
            " is below the minimum sensible rate 1/(M*N) = " + format_rate(lowest) +
            "; fewer than one expected flip per population per generation");
    }
    return validated;
}

StoppingPolicy StoppingPolicy::derive(const GaConfig& cfg, const FitnessFunction& fitness) {
    StoppingPolicy policy;
    policy.fraction_threshold = cfg.fraction_threshold;
    policy.override_epoch = cfg.max_epochs_override;
    policy.target_fitness = fitness.target_fitness();
    if (cfg.mutation_rate > 0.0) {
        policy.maturity_epoch = helixga::maturity_epoch(cfg.mutation_rate);
        policy.hard_cap_epoch = helixga::old_age_epoch(cfg.mutation_rate);
    } else if (!cfg.max_epochs_override) {
        throw std::invalid_argument(
            "StoppingPolicy: mutation_rate 0 never ages; set max_epochs_override");
    }
    return policy;
}

std::string_view to_string(StopReason reason) {
    switch (reason) {
    case StopReason::kTargetFitness: return "target-fitness";
    case StopReason::kFractionThreshold: return "fraction-threshold";
    case StopReason::kHardCap: return "hard-cap";
    case StopReason::kOverride: return "override";
    }
    return "unknown";
}

Population initialize_population(const GaConfig& cfg, RandomSource& rng) {
    validate_config(cfg);
    std::vector<DoubleHelixChromosome> members;
    members.reserve(cfg.population_size);
    for (std::size_t i = 0; i < cfg.population_size; ++i) {
        members.push_back(
            DoubleHelixChromosome::from_visible(BitStrand::random(cfg.chromosome_length, rng)));
    }
    return Population(std::move(members), 0);
}

namespace {

std::vector<std::size_t> ranked_indices(std::span<const double> scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) {
            return scores[a] > scores[b];
        }
        return a < b;
    });
    return order;
}

std::size_t select_tournament(std::span<const double> scores, std::size_t tournament_size,
                              RandomSource& rng) {
    std::size_t winner = static_cast<std::size_t>(rng.below(scores.size()));
    for (std::size_t round = 1; round < tournament_size; ++round) {
        const std::size_t candidate = static_cast<std::size_t>(rng.below(scores.size()));
        if (scores[candidate] > scores[winner] ||
            (scores[candidate] == scores[winner] && candidate < winner)) {
            winner = candidate;
        }
    }
    return winner;
}

std::size_t select_proportional(std::span<const double> scores, RandomSource& rng) {
    const double lowest = *std::min_element(scores.begin(), scores.end());
    double total = 0.0;
    for (const double score : scores) {
        total += score - lowest; // shift makes negative scores usable
    }
    if (total <= 0.0) {
        return static_cast<std::size_t>(rng.below(scores.size()));
    }
    const double pick = rng.next_double() * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        cumulative += scores[i] - lowest;
        if (pick < cumulative) {
            return i;
        }
    }
    return scores.size() - 1;
}

std::size_t select_parent(std::span<const double> scores, const SelectionPolicy& policy,
                          RandomSource& rng) {
    if (policy.kind == SelectionKind::kFitnessProportional) {
        return select_proportional(scores, rng);
    }
    return select_tournament(scores, policy.tournament_size, rng);
}

// Floyd's sampling of `count` distinct cut points in [1, length-1], sorted.
std::vector<std::size_t> sample_cut_points(std::size_t count, std::size_t length,
                                           RandomSource& rng) {
    const std::size_t universe = length - 1;
    if (count > universe) {
        throw std::invalid_argument("sample_cut_points: fewer than count cut positions exist");
    }
    std::vector<std::size_t> cuts;
    cuts.reserve(count);
    for (std::size_t i = universe - count; i < universe; ++i) {
        const std::size_t pick = static_cast<std::size_t>(rng.below(i + 1)) + 1;
        if (std::find(cuts.begin(), cuts.end(), pick) != cuts.end()) {
            cuts.push_back(i + 1);
        } else {
            cuts.push_back(pick);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

std::vector<double> evaluate_all(const Population& pop, const FitnessFunction& fitness) {
    std::vector<double> scores;
    scores.reserve(pop.size());
    for (const auto& member : pop.members()) {
        scores.push_back(fitness(member.visible()));
    }
    return scores;
}

} // namespace

Population step_generation(const Population& pop, std::span<const double> scores,
                           const GaConfig& cfg, RandomSource& rng) {
    if (pop.size() != cfg.population_size || pop.chromosome_length() != cfg.chromosome_length) {
        throw std::invalid_argument("step_generation: population does not match config");
    }
    if (scores.size() != pop.size()) {
        throw std::invalid_argument("step_generation: one score per member required");
    }

    std::vector<DoubleHelixChromosome> next;
    next.reserve(cfg.population_size);

    const auto order = ranked_indices(scores);
    for (std::size_t e = 0; e < cfg.elitism_count; ++e) {
        next.push_back(pop.member(order[e])); // exempt from mutation
    }

    while (next.size() < cfg.population_size) {
        const std::size_t ia = select_parent(scores, cfg.selection, rng);
        const std::size_t ib = select_parent(scores, cfg.selection, rng);
        const bool crossed = rng.bernoulli(cfg.crossover_rate);
        DoubleHelixChromosome child1 = pop.member(ia);
        DoubleHelixChromosome child2 = pop.member(ib);
        if (crossed) {
            const auto cuts = sample_cut_points(cfg.crossover_points, cfg.chromosome_length, rng);
            auto [c1, c2] = crossover(child1, child2, cuts);
            child1 = std::move(c1);
            child2 = std::move(c2);
        }
        next.push_back(mutate_bernoulli(child1, cfg.mutation_rate, rng));
        if (next.size() < cfg.population_size) {
            next.push_back(mutate_bernoulli(child2, cfg.mutation_rate, rng));
        }
    }

    return Population(std::move(next), pop.epoch() + 1);
}

Population step_generation(const Population& pop, const GaConfig& cfg,
                           const FitnessFunction& fitness, RandomSource& rng) {
    const auto scores = evaluate_all(pop, fitness);
    return step_generation(pop, scores, cfg, rng);
}

AgingReport run(const GaConfig& cfg, const FitnessFunction& fitness) {
    validate_config(cfg);
    if (fitness.expected_length() && *fitness.expected_length() != cfg.chromosome_length) {
        throw std::invalid_argument("run: fitness expects chromosome_length " +
                                    std::to_string(*fitness.expected_length()));
    }
    const StoppingPolicy policy = StoppingPolicy::derive(cfg, fitness);

    RandomSource rng(cfg.seed);
    Population pop = initialize_population(cfg, rng);
    std::vector<double> scores = evaluate_all(pop, fitness);

    AgingReport report;
    report.population_size = cfg.population_size;
    report.maturity_epoch = policy.maturity_epoch;
    report.hard_cap_epoch = policy.hard_cap_epoch;
    report.total_evaluations = cfg.population_size;

    for (;;) {
        const std::uint64_t epoch = pop.epoch();
        const double fraction = population_mutated_fraction(pop);
        const auto best_it = std::max_element(scores.begin(), scores.end());
        const double best = *best_it;
        const double mean =
            std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
        report.records.push_back({epoch, fraction, best, mean, report.total_evaluations});

        if (!report.best_visible || best > report.best_fitness) {
            report.best_fitness = best;
            report.best_visible =
                pop.member(static_cast<std::size_t>(best_it - scores.begin())).visible();
        }
        if (!report.first_passage_epoch && fraction >= policy.fraction_threshold) {
            report.first_passage_epoch = epoch;
        }

        // Fixed stop order: target fitness, fraction threshold, hard cap, override.
        if (policy.target_fitness && best >= *policy.target_fitness) {
            report.stop_reason = StopReason::kTargetFitness;
            break;
        }
        if (fraction >= policy.fraction_threshold) {
            report.stop_reason = StopReason::kFractionThreshold;
            break;
        }
        if (policy.hard_cap_epoch && epoch >= *policy.hard_cap_epoch) {
            report.stop_reason = StopReason::kHardCap;
            break;
        }
        if (policy.override_epoch && epoch >= *policy.override_epoch) {
            report.stop_reason = StopReason::kOverride;
            break;
        }

        pop = step_generation(pop, scores, cfg, rng);
        scores = evaluate_all(pop, fitness);
        report.total_evaluations += cfg.population_size;
    }
    return report;
}

} // namespace helixga
