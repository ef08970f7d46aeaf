#pragma once

#include "helixga/bitstrand.hpp"

#include <cstddef>
#include <span>
#include <utility>

namespace helixga {

class RandomSource;

/// Doubled chromosome: an evolving "visible" strand carrying the genetic
/// material, paired with an "invisible" strand of the same length that starts
/// out as its exact bitwise negation. Mutation touches only the visible
/// strand; crossover mixes both strands at the same cut points. A locus where
/// the two strands agree has therefore been flipped an odd number of times,
/// which is what makes the pair usable as an aging counter.
class DoubleHelixChromosome {
public:
    /// Builds a chromosome whose invisible strand is the complement of
    /// `visible`. effectively_mutated_count() of the result is 0.
    static DoubleHelixChromosome from_visible(BitStrand visible);

    /// Assembles a chromosome from explicit strands (used by crossover and
    /// deserialization). The strands must have equal length; complementarity
    /// is not required, it only holds for freshly constructed chromosomes.
    static DoubleHelixChromosome from_parts(BitStrand visible, BitStrand invisible);

    const BitStrand& visible() const noexcept { return visible_; }
    const BitStrand& invisible() const noexcept { return invisible_; }
    std::size_t length() const noexcept { return visible_.length(); }

    /// Number of loci where visible and invisible agree, i.e. loci whose
    /// total historical flip count is odd. Even flip counts at a locus cancel
    /// out and are not observable here (backward evolution).
    std::size_t effectively_mutated_count() const {
        return visible_.count_equal(invisible_);
    }

    friend bool operator==(const DoubleHelixChromosome&, const DoubleHelixChromosome&) = default;

private:
    DoubleHelixChromosome(BitStrand visible, BitStrand invisible);

    BitStrand visible_;
    BitStrand invisible_;
};

/// Flips the visible bit at `locus`; the invisible strand is untouched.
/// Throws std::out_of_range for an invalid locus.
DoubleHelixChromosome mutate_locus(const DoubleHelixChromosome& chrom, std::size_t locus);

/// Flips each visible locus independently with probability p; the invisible
/// strand is untouched. Throws std::invalid_argument unless 0 <= p <= 1.
DoubleHelixChromosome mutate_bernoulli(const DoubleHelixChromosome& chrom, double p,
                                       RandomSource& rng);

/// Multi-point crossover. cut_points must be strictly increasing, each in
/// [1, length-1]; an empty list clones the parents. Both strands are mixed at
/// the same cuts: segment ownership alternates between the parents, the first
/// child starting with parent a's leading segment and the second with b's.
/// Every child locus keeps one parent's (visible, invisible) pair intact, so
/// crossover of freshly constructed parents never breaks complementarity.
std::pair<DoubleHelixChromosome, DoubleHelixChromosome>
crossover(const DoubleHelixChromosome& a, const DoubleHelixChromosome& b,
          std::span<const std::size_t> cut_points);

} // namespace helixga
