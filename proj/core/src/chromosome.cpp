#include "helixga/chromosome.hpp"

#include "helixga/rng.hpp"

#include <stdexcept>

namespace helixga {

DoubleHelixChromosome::DoubleHelixChromosome(BitStrand visible, BitStrand invisible)
    : visible_(std::move(visible)), invisible_(std::move(invisible)) {}

DoubleHelixChromosome DoubleHelixChromosome::from_visible(BitStrand visible) {
    BitStrand invisible = visible.complemented();
    return DoubleHelixChromosome(std::move(visible), std::move(invisible));
}

DoubleHelixChromosome DoubleHelixChromosome::from_parts(BitStrand visible, BitStrand invisible) {
    if (visible.length() != invisible.length()) {
        throw std::invalid_argument("DoubleHelixChromosome: strand lengths differ");
    }
    return DoubleHelixChromosome(std::move(visible), std::move(invisible));
}

DoubleHelixChromosome mutate_locus(const DoubleHelixChromosome& chrom, std::size_t locus) {
    BitStrand visible = chrom.visible();
    visible.flip(locus);
    return DoubleHelixChromosome::from_parts(std::move(visible), chrom.invisible());
}

DoubleHelixChromosome mutate_bernoulli(const DoubleHelixChromosome& chrom, double p,
                                       RandomSource& rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("mutate_bernoulli: probability must be in [0,1]");
    }
    BitStrand visible = chrom.visible();
    for (std::size_t locus = 0; locus < visible.length(); ++locus) {
        if (rng.bernoulli(p)) {
            visible.flip(locus);
        }
    }
    return DoubleHelixChromosome::from_parts(std::move(visible), chrom.invisible());
}

std::pair<DoubleHelixChromosome, DoubleHelixChromosome>
crossover(const DoubleHelixChromosome& a, const DoubleHelixChromosome& b,
          std::span<const std::size_t> cut_points) {
    const std::size_t length = a.length();
    if (b.length() != length) {
        throw std::invalid_argument("crossover: parent lengths differ");
    }
    std::size_t previous = 0;
    for (const std::size_t cut : cut_points) {
        if (cut < 1 || cut > length - 1) {
            throw std::invalid_argument("crossover: cut point out of [1, length-1]");
        }
        if (cut <= previous) {
            throw std::invalid_argument("crossover: cut points must be strictly increasing");
        }
        previous = cut;
    }

    BitStrand vis1(length), inv1(length), vis2(length), inv2(length);
    std::size_t next_cut_index = 0;
    bool take_a_first = true;
    for (std::size_t locus = 0; locus < length; ++locus) {
        if (next_cut_index < cut_points.size() && locus == cut_points[next_cut_index]) {
            take_a_first = !take_a_first;
            ++next_cut_index;
        }
        const DoubleHelixChromosome& first = take_a_first ? a : b;
        const DoubleHelixChromosome& second = take_a_first ? b : a;
        vis1.set_bit(locus, first.visible().bit(locus));
        inv1.set_bit(locus, first.invisible().bit(locus));
        vis2.set_bit(locus, second.visible().bit(locus));
        inv2.set_bit(locus, second.invisible().bit(locus));
    }
    return {DoubleHelixChromosome::from_parts(std::move(vis1), std::move(inv1)),
            DoubleHelixChromosome::from_parts(std::move(vis2), std::move(inv2))};
}

} // namespace helixga
