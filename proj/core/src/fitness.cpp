#include "helixga/fitness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace helixga {

FitnessFunction::FitnessFunction(std::string name,
                                 std::function<double(const BitStrand&)> evaluate,
                                 std::optional<double> target_fitness,
                                 std::optional<std::size_t> expected_length)
    : name_(std::move(name)),
      evaluate_(std::move(evaluate)),
      target_fitness_(target_fitness),
      expected_length_(expected_length) {
    if (!evaluate_) {
        throw std::invalid_argument("FitnessFunction: evaluator must be callable");
    }
}

FitnessFunction FitnessFunction::with_target(std::optional<double> target) const {
    FitnessFunction copy = *this;
    copy.target_fitness_ = target;
    return copy;
}

std::vector<double> decode_binary_variables(const BitStrand& strand, std::size_t variables,
                                            std::size_t bits_per_variable, double lower,
                                            double upper) {
    if (variables == 0 || bits_per_variable == 0) {
        throw std::invalid_argument("decode_binary_variables: counts must be >= 1");
    }
    if (bits_per_variable > 53) {
        throw std::invalid_argument(
            "decode_binary_variables: bits_per_variable above 53 exceeds double precision");
    }
    if (!(lower < upper)) {
        throw std::invalid_argument("decode_binary_variables: interval must satisfy lower < upper");
    }
    if (strand.length() != variables * bits_per_variable) {
        throw std::invalid_argument(
            "decode_binary_variables: strand length must equal variables * bits_per_variable");
    }
    const double steps = static_cast<double>((std::uint64_t{1} << bits_per_variable) - 1);
    std::vector<double> values;
    values.reserve(variables);
    for (std::size_t v = 0; v < variables; ++v) {
        std::uint64_t raw = 0;
        for (std::size_t b = 0; b < bits_per_variable; ++b) {
            raw = (raw << 1) | static_cast<std::uint64_t>(strand.bit(v * bits_per_variable + b));
        }
        values.push_back(lower + static_cast<double>(raw) * (upper - lower) / steps);
    }
    return values;
}

namespace {

FitnessFunction make_continuous(std::string name, const BuiltinFitnessParams& params,
                                double default_lower, double default_upper,
                                std::function<double(const std::vector<double>&)> objective) {
    const double lower = params.lower.value_or(default_lower);
    const double upper = params.upper.value_or(default_upper);
    const std::size_t variables = params.variables;
    const std::size_t bits = params.bits_per_variable;
    // Validate eagerly so bad params fail at construction, not first call.
    decode_binary_variables(BitStrand(variables * bits), variables, bits, lower, upper);
    auto evaluate = [variables, bits, lower, upper, objective = std::move(objective)](
                        const BitStrand& strand) {
        return -objective(decode_binary_variables(strand, variables, bits, lower, upper));
    };
    return FitnessFunction(std::move(name), std::move(evaluate), std::nullopt, variables * bits);
}

} // namespace

FitnessFunction builtin_fitness(std::string_view name, const BuiltinFitnessParams& params) {
    if (name == "onemax") {
        return FitnessFunction("onemax", [](const BitStrand& strand) {
            return static_cast<double>(strand.count_ones());
        });
    }
    if (name == "binary-sphere") {
        return make_continuous("binary-sphere", params, -1.0, 1.0,
                               [](const std::vector<double>& x) {
                                   double sum = 0.0;
                                   for (const double v : x) {
                                       sum += v * v;
                                   }
                                   return sum;
                               });
    }
    if (name == "binary-rastrigin") {
        return make_continuous("binary-rastrigin", params, -5.12, 5.12,
                               [](const std::vector<double>& x) {
                                   double sum = 10.0 * static_cast<double>(x.size());
                                   for (const double v : x) {
                                       sum += v * v -
                                              10.0 * std::cos(2.0 * std::numbers::pi * v);
                                   }
                                   return sum;
                               });
    }
    throw std::invalid_argument("builtin_fitness: unknown name '" + std::string(name) +
                                "' (expected onemax, binary-sphere or binary-rastrigin)");
}

} // namespace helixga
