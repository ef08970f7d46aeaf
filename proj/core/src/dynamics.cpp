#include "helixga/dynamics.hpp"

#include "helixga/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace helixga {

void DynamicsConfig::validate() const {
    if (!(flip_probability >= 0.0 && flip_probability <= 1.0)) {
        throw std::invalid_argument("DynamicsConfig: flip probability must be in [0,1]");
    }
    if (!(initial_probability >= 0.0 && initial_probability <= 1.0)) {
        throw std::invalid_argument("DynamicsConfig: initial probability must be in [0,1]");
    }
}

double recurrence_step(double p_k, double p) {
    if (!(p_k >= 0.0 && p_k <= 1.0) || !(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("recurrence_step: arguments must be in [0,1]");
    }
    return std::clamp((1.0 - 2.0 * p) * p_k + p, 0.0, 1.0);
}

Trajectory iterate(const DynamicsConfig& config, std::size_t epochs) {
    config.validate();
    Trajectory trajectory{config, {}};
    trajectory.values.reserve(epochs + 1);
    double value = config.initial_probability;
    trajectory.values.push_back(value);
    for (std::size_t k = 0; k < epochs; ++k) {
        value = recurrence_step(value, config.flip_probability);
        trajectory.values.push_back(value);
    }
    return trajectory;
}

std::optional<double> limit_of(const DynamicsConfig& config) {
    config.validate();
    if (config.flip_probability == 0.0) {
        return config.initial_probability;
    }
    if (config.flip_probability == 1.0) {
        if (config.initial_probability == 0.5) {
            return 0.5;
        }
        return std::nullopt; // period two, no limit
    }
    return 0.5;
}

ConvergenceClass classify(const DynamicsConfig& config) {
    config.validate();
    const double p = config.flip_probability;
    if (p == 0.0) {
        return ConvergenceClass::kConstant;
    }
    if (p == 0.5) {
        return ConvergenceClass::kConstantAtHalf;
    }
    if (p == 1.0) {
        return ConvergenceClass::kPeriodTwo;
    }
    return p < 0.5 ? ConvergenceClass::kMonotoneToHalf : ConvergenceClass::kOscillatoryToHalf;
}

std::string_view to_string(ConvergenceClass kind) {
    switch (kind) {
    case ConvergenceClass::kConstant: return "constant";
    case ConvergenceClass::kMonotoneToHalf: return "monotone-to-half";
    case ConvergenceClass::kConstantAtHalf: return "constant-at-half";
    case ConvergenceClass::kOscillatoryToHalf: return "oscillatory-to-half";
    case ConvergenceClass::kPeriodTwo: return "period-two";
    }
    return "unknown";
}

double approx_fraction(std::uint64_t k, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("approx_fraction: probability must be in [0,1]");
    }
    return 0.5 * (1.0 - std::exp(-2.0 * static_cast<double>(k) * p));
}

namespace {

std::uint64_t ceil_reciprocal(double numerator, double p, const char* what) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": requires 0 < p <= 1");
    }
    const double epochs = std::ceil(numerator / p);
    if (!(epochs < 9.0e18)) {
        throw std::invalid_argument(std::string(what) + ": p too small, epoch count overflows");
    }
    return static_cast<std::uint64_t>(epochs);
}

} // namespace

std::uint64_t maturity_epoch(double p) {
    return ceil_reciprocal(0.5, p, "maturity_epoch");
}

std::uint64_t old_age_epoch(double p) {
    return ceil_reciprocal(3.0, p, "old_age_epoch");
}

double min_mutation_rate(std::uint64_t n_bits) {
    if (n_bits == 0) {
        throw std::invalid_argument("min_mutation_rate: n_bits must be >= 1");
    }
    return 1.0 / static_cast<double>(n_bits);
}

std::size_t FlipSimulationResult::passage_count() const {
    std::size_t count = 0;
    for (const auto& passage : first_passage) {
        count += passage.has_value();
    }
    return count;
}

std::optional<double> FlipSimulationResult::first_passage_quartile(double q) const {
    std::vector<std::uint64_t> passed;
    passed.reserve(first_passage.size());
    for (const auto& passage : first_passage) {
        if (passage) {
            passed.push_back(*passage);
        }
    }
    if (passed.empty()) {
        return std::nullopt;
    }
    std::sort(passed.begin(), passed.end());
    const double position = q * static_cast<double>(passed.size() - 1);
    const std::size_t lower = static_cast<std::size_t>(position);
    const std::size_t upper = std::min(lower + 1, passed.size() - 1);
    const double weight = position - static_cast<double>(lower);
    return (1.0 - weight) * static_cast<double>(passed[lower]) +
           weight * static_cast<double>(passed[upper]);
}

std::optional<double> FlipSimulationResult::median_first_passage() const {
    return first_passage_quartile(0.5);
}

FlipSimulationResult simulate_flip_fraction(std::uint64_t n_bits, double p,
                                            std::uint64_t epochs, std::uint64_t trials,
                                            RandomSource& rng, unsigned threads) {
    if (n_bits == 0) {
        throw std::invalid_argument("simulate_flip_fraction: n_bits must be >= 1");
    }
    if (trials == 0) {
        throw std::invalid_argument("simulate_flip_fraction: trials must be >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("simulate_flip_fraction: probability must be in [0,1]");
    }

    const std::uint64_t base = rng.next_u64();
    const std::size_t records = static_cast<std::size_t>(epochs) + 1;

    // Per-trial odd-parity counts; slot layout keeps the reduction in strict
    // trial order no matter how many workers computed them.
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(trials) * records, 0);
    std::vector<std::optional<std::uint64_t>> passages(trials);

    const std::uint64_t half_threshold = (n_bits + 1) / 2; // count >= this  <=>  fraction >= 1/2

    auto run_trials = [&](std::uint64_t first, std::uint64_t last) {
        const std::size_t words = static_cast<std::size_t>((n_bits + 63) / 64);
        std::vector<std::uint64_t> parity(words);
        for (std::uint64_t trial = first; trial < last; ++trial) {
            RandomSource trial_rng(derive_seed(base, trial));
            std::fill(parity.begin(), parity.end(), 0);
            std::uint64_t* row = counts.data() + static_cast<std::size_t>(trial) * records;
            row[0] = 0;
            std::optional<std::uint64_t> passage;
            for (std::uint64_t k = 1; k <= epochs; ++k) {
                for (std::uint64_t bit = 0; bit < n_bits; ++bit) {
                    if (trial_rng.bernoulli(p)) {
                        parity[bit >> 6] ^= 1ull << (bit & 63);
                    }
                }
                std::uint64_t mutated = 0;
                for (const auto word : parity) {
                    mutated += static_cast<std::uint64_t>(std::popcount(word));
                }
                row[k] = mutated;
                if (!passage && mutated >= half_threshold) {
                    passage = k;
                }
            }
            passages[trial] = passage;
        }
    };

    unsigned worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max(1u, std::min<unsigned>(worker_count, static_cast<unsigned>(
                                                       std::min<std::uint64_t>(trials, 256))));
    if (worker_count == 1) {
        run_trials(0, trials);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        const std::uint64_t chunk = (trials + worker_count - 1) / worker_count;
        for (unsigned w = 0; w < worker_count; ++w) {
            const std::uint64_t first = static_cast<std::uint64_t>(w) * chunk;
            const std::uint64_t last = std::min<std::uint64_t>(first + chunk, trials);
            if (first >= last) {
                break;
            }
            workers.emplace_back(run_trials, first, last);
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }

    FlipSimulationResult result;
    result.n_bits = n_bits;
    result.flip_probability = p;
    result.mean_fraction.resize(records);
    result.std_fraction.resize(records);
    result.first_passage = std::move(passages);

    const double bits = static_cast<double>(n_bits);
    for (std::size_t k = 0; k < records; ++k) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            const double fraction =
                static_cast<double>(counts[static_cast<std::size_t>(trial) * records + k]) / bits;
            sum += fraction;
            sum_sq += fraction * fraction;
        }
        const double n = static_cast<double>(trials);
        const double mean = sum / n;
        result.mean_fraction[k] = mean;
        if (trials > 1) {
            const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
            result.std_fraction[k] = std::sqrt(variance);
        } else {
            result.std_fraction[k] = 0.0;
        }
    }
    return result;
}

} // namespace helixga
