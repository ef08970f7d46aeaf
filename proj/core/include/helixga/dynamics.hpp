#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace helixga {

class RandomSource;

/// Parameters of the single-bit flip process: p is the per-bit per-epoch flip
/// probability, initial_probability the chance the bit starts in state 1.
struct DynamicsConfig {
    double flip_probability = 0.0;    // p
    double initial_probability = 0.0; // p0

    /// Throws std::invalid_argument unless both values lie in [0,1].
    void validate() const;
};

/// One step of the flip recurrence: p_{k+1} = (1 - 2p) * p_k + p.
/// Both arguments must be in [0,1]; the result is clamped to [0,1] to absorb
/// last-ulp rounding.
double recurrence_step(double p_k, double p);

/// The deterministic sequence p_0 ... p_K produced by the recurrence.
/// Iterated values are the module's ground-truth oracle; no closed form is
/// ever substituted for them.
struct Trajectory {
    DynamicsConfig config;
    std::vector<double> values; // size K+1, values[k] == p_k
};

Trajectory iterate(const DynamicsConfig& config, std::size_t epochs);

/// Limit of p_k: 1/2 whenever 0 < p < 1, the initial state for p = 0, and
/// no limit for p = 1 unless the sequence starts (and stays) at 1/2.
std::optional<double> limit_of(const DynamicsConfig& config);

/// Long-run behavior of the recurrence as a function of p alone (p0 only
/// matters for p = 0, where the sequence stays at its initial state).
enum class ConvergenceClass {
    kConstant,         // p = 0
    kMonotoneToHalf,   // 0 < p < 1/2
    kConstantAtHalf,   // p = 1/2
    kOscillatoryToHalf,// 1/2 < p < 1
    kPeriodTwo,        // p = 1
};

ConvergenceClass classify(const DynamicsConfig& config);
std::string_view to_string(ConvergenceClass kind);

/// Closed-form approximation of the mutated-bit fraction after k epochs:
/// (1/2) * (1 - exp(-2 k p)). Monotone in k with limit 1/2; assumes the
/// all-unmutated start (p0 = 0).
double approx_fraction(std::uint64_t k, double p);

/// Epoch after which the population is considered mature: ceil(1/(2p)).
/// Throws std::invalid_argument unless 0 < p <= 1.
std::uint64_t maturity_epoch(double p);

/// Hard upper cap on useful generations: ceil(3/p).
/// Throws std::invalid_argument unless 0 < p <= 1.
std::uint64_t old_age_epoch(double p);

/// Lowest sensible mutation rate, one expected flip per population per epoch:
/// 1 / n_bits. Throws std::invalid_argument when n_bits == 0.
double min_mutation_rate(std::uint64_t n_bits);

/// Monte-Carlo companion to iterate(): T independent populations of n_bits
/// bits under pure Bernoulli(p) flipping, no selection and no crossover.
struct FlipSimulationResult {
    std::uint64_t n_bits = 0;
    double flip_probability = 0.0;
    /// Per-epoch mean and sample standard deviation (across trials) of the
    /// odd-parity bit fraction; index 0 is the all-unmutated start.
    std::vector<double> mean_fraction;
    std::vector<double> std_fraction;
    /// Per trial, the first epoch at which the fraction reached 1/2, or
    /// nullopt when that never happened within the simulated horizon.
    std::vector<std::optional<std::uint64_t>> first_passage;

    std::size_t passage_count() const;
    /// Median / quartiles over the trials that did reach 1/2 (linear
    /// interpolation between order statistics); nullopt when none did.
    std::optional<double> median_first_passage() const;
    std::optional<double> first_passage_quartile(double q) const;
};

/// Runs the flip simulation. Trials are split across `threads` workers
/// (0 = one per hardware thread); each trial draws from its own stream
/// derived from `rng`, and results are reduced in trial order, so the output
/// is identical for any thread count.
FlipSimulationResult simulate_flip_fraction(std::uint64_t n_bits, double p,
                                            std::uint64_t epochs, std::uint64_t trials,
                                            RandomSource& rng, unsigned threads = 1);

} // namespace helixga
