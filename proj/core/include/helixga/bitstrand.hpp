#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace helixga {

class RandomSource;

/// Fixed-length packed bit sequence addressed by locus index.
/// The length is set at construction and never changes. In the text form
/// ('0'/'1' characters) locus 0 is the leftmost character.
class BitStrand {
public:
    /// All-zero strand. Throws std::invalid_argument if length == 0.
    explicit BitStrand(std::size_t length);

    /// Parses a '0'/'1' string, locus 0 leftmost.
    static BitStrand from_string(std::string_view text);

    /// Uniformly random strand.
    static BitStrand random(std::size_t length, RandomSource& rng);

    std::size_t length() const noexcept { return length_; }

    bool bit(std::size_t locus) const;
    void set_bit(std::size_t locus, bool value);
    void flip(std::size_t locus);

    /// Bitwise complement at every locus.
    BitStrand complemented() const;

    std::size_t count_ones() const noexcept;

    /// Number of loci where this strand and `other` hold the same bit.
    std::size_t count_equal(const BitStrand& other) const;

    /// Number of loci where the strands differ (Hamming distance).
    std::size_t count_diff(const BitStrand& other) const;

    std::string to_string() const;

    friend bool operator==(const BitStrand&, const BitStrand&) = default;

private:
    void check_locus(std::size_t locus) const;

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_; // bits past length_ in the last word stay zero
};

} // namespace helixga
