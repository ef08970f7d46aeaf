#pragma once

#include "helixga/chromosome.hpp"

#include <cstdint>
#include <vector>

namespace helixga {

/// Fixed-size collection of chromosomes plus a generation counter.
/// All members share one chromosome length, so the total bit count M*N is
/// constant over a run.
class Population {
public:
    /// Throws std::invalid_argument when `members` is empty or the member
    /// lengths are not all equal.
    explicit Population(std::vector<DoubleHelixChromosome> members, std::uint64_t epoch = 0);

    std::size_t size() const noexcept { return members_.size(); }
    std::size_t chromosome_length() const noexcept { return members_.front().length(); }
    std::uint64_t total_bits() const noexcept {
        return static_cast<std::uint64_t>(size()) * chromosome_length();
    }
    std::uint64_t epoch() const noexcept { return epoch_; }

    const DoubleHelixChromosome& member(std::size_t index) const { return members_.at(index); }
    const std::vector<DoubleHelixChromosome>& members() const noexcept { return members_; }

    friend bool operator==(const Population&, const Population&) = default;

private:
    std::vector<DoubleHelixChromosome> members_;
    std::uint64_t epoch_ = 0;
};

/// Fraction of effectively mutated bits over all M*N loci, in [0,1].
/// This is the aging observable: loci whose visible and invisible bits agree.
double population_mutated_fraction(const Population& pop);

} // namespace helixga
