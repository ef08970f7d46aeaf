#pragma once

#include "helixga/bitstrand.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace helixga {

/// Deterministic scoring of a visible strand (higher is better). The
/// invisible strand is never read by fitness; it exists only for the aging
/// counters. An optional target lets the engine stop once the known optimum
/// is reached, and an optional expected length guards against wiring a
/// decoder to the wrong chromosome size.
class FitnessFunction {
public:
    FitnessFunction(std::string name, std::function<double(const BitStrand&)> evaluate,
                    std::optional<double> target_fitness = std::nullopt,
                    std::optional<std::size_t> expected_length = std::nullopt);

    double operator()(const BitStrand& visible) const { return evaluate_(visible); }

    const std::string& name() const noexcept { return name_; }
    std::optional<double> target_fitness() const noexcept { return target_fitness_; }
    std::optional<std::size_t> expected_length() const noexcept { return expected_length_; }

    /// Copy of this function with the stopping target replaced.
    FitnessFunction with_target(std::optional<double> target) const;

private:
    std::string name_;
    std::function<double(const BitStrand&)> evaluate_;
    std::optional<double> target_fitness_;
    std::optional<std::size_t> expected_length_;
};

/// Parameters for the built-in benchmark functions. The continuous functions
/// decode each variable from bits_per_variable bits as an unsigned integer
/// mapped affinely onto [lower, upper]; more bits per variable refine the
/// search grid (oversampling).
struct BuiltinFitnessParams {
    std::size_t variables = 1;
    std::size_t bits_per_variable = 20;
    std::optional<double> lower; // defaults: -1 for sphere, -5.12 for rastrigin
    std::optional<double> upper; // defaults:  1 for sphere,  5.12 for rastrigin
};

/// Builds one of {onemax, binary-sphere, binary-rastrigin}.
/// onemax scores the count of 1-bits and accepts any strand length; the
/// continuous functions score -f(x) and expect variables * bits_per_variable
/// loci. Throws std::invalid_argument for an unknown name or bad params.
FitnessFunction builtin_fitness(std::string_view name, const BuiltinFitnessParams& params = {});

/// Affine decode used by the continuous builtins, exposed for reuse and
/// testing: variable v is read MSB-first from loci [v*bits, (v+1)*bits) and
/// mapped onto [lower, upper] with 2^bits - 1 equal steps.
std::vector<double> decode_binary_variables(const BitStrand& strand, std::size_t variables,
                                            std::size_t bits_per_variable, double lower,
                                            double upper);

} // namespace helixga
