#pragma once

#include <array>
#include <cstdint>

namespace helixga {

/// Derives an independent stream seed from a base value and a stream index.
/// Pure function: the same (base, index) always yields the same seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Deterministic seeded random source (xoshiro256** expanded from the seed
/// with splitmix64). Every stochastic operation in this library takes one of
/// these explicitly, so runs are reproducible bit for bit from a single seed,
/// independent of platform or thread count.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// True with probability p. Throws std::invalid_argument unless 0 <= p <= 1.
    bool bernoulli(double p);

    /// Uniform integer in [0, bound). bound must be >= 1. Unbiased (rejection).
    std::uint64_t below(std::uint64_t bound);

    /// Child stream derived from the next draw of this stream.
    RandomSource fork();

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
};

} // namespace helixga
