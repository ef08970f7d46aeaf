#include "helixga/rng.hpp"

#include <bit>
#include <stdexcept>

namespace helixga {

namespace {

// splitmix64 (Vigna); used only for seeding and stream derivation.
std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t state = base ^ (0x9E3779B97F4A7C15ull * (index + 1));
    std::uint64_t mixed = splitmix64_next(state);
    return splitmix64_next(state) ^ mixed;
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t state = seed;
    for (auto& word : state_) {
        word = splitmix64_next(state);
    }
}

std::uint64_t RandomSource::next_u64() {
    // xoshiro256** (Blackman & Vigna, public domain reference algorithm)
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RandomSource::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("bernoulli: probability must be in [0,1]");
    }
    return next_double() < p;
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("below: bound must be >= 1");
    }
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t value = next_u64();
        if (value >= threshold) {
            return value % bound;
        }
    }
}

RandomSource RandomSource::fork() {
    return RandomSource(derive_seed(next_u64(), 0));
}

} // namespace helixga
