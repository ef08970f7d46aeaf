#pragma once

#include "helixga/dynamics.hpp"
#include "helixga/engine.hpp"
#include "helixga/smallworld.hpp"

#include <filesystem>
#include <span>
#include <string>

namespace helixga {

/// Deterministic text form of a double: up to 12 significant digits, decimal
/// point, no thousands separators, C locale.
std::string format_csv_double(double value);

/// Theory table `epoch,p_exact,p_approx`: the iterated recurrence next to the
/// exponential approximation at the trajectory's flip probability.
void write_theory_csv(const std::filesystem::path& path, const Trajectory& trajectory);

/// Simulation tables: `epoch,mean_fraction,std_fraction` and, separately,
/// `trial,first_passage_epoch` ("none" when the fraction never reached 1/2).
void write_simulation_csv(const std::filesystem::path& fractions_path,
                          const std::filesystem::path& passages_path,
                          const FlipSimulationResult& result);

/// Run trace `epoch,fraction,best_fitness,mean_fitness,evaluations` and a
/// one-row summary `stop_reason,first_passage_epoch,maturity_epoch,
/// hard_cap_epoch,total_evaluations` (absent values written as "none").
void write_aging_csv(const std::filesystem::path& records_path,
                     const std::filesystem::path& summary_path, const AgingReport& report);

/// Cover rows `method,dimension,subset_size,is_cover,vertices` with the
/// vertices as '|'-separated bit strings, one row per result.
void write_cover_csv(const std::filesystem::path& path, const Hypercube& cube,
                     std::span<const CoverResult> results);

} // namespace helixga
