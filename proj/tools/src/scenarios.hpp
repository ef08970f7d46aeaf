#pragma once

#include "options.hpp"

#include <string_view>

namespace helixga::cli {

/// Bundled configurations selectable with --scenario.
/// "paper-example": the published worked example this tool reproduces —
/// 30 chromosomes of 20 bits, mutation rate 0.03, runs capped at 20
/// generations, OneMax standing in for the original (unpublished) fitness.
inline constexpr std::string_view kPaperExampleScenario =
    "# 30 chromosomes, 20 bits each, p = 0.03, runs capped at 20 generations\n"
    "ga.population_size = 30\n"
    "ga.chromosome_length = 20\n"
    "ga.mutation_rate = 0.03\n"
    "ga.max_epochs = 20\n"
    "fitness.name = onemax\n";

inline std::string_view scenario_text(std::string_view name) {
    if (name == "paper-example") {
        return kPaperExampleScenario;
    }
    throw ConfigError(std::string(name), "unknown scenario (available: paper-example)");
}

} // namespace helixga::cli
