#include "helixga/bitstrand.hpp"

#include "helixga/rng.hpp"

#include <bit>
#include <stdexcept>

namespace helixga {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t length) {
    return (length + kWordBits - 1) / kWordBits;
}

std::uint64_t tail_mask(std::size_t length) {
    const std::size_t used = length % kWordBits;
    return used == 0 ? ~0ull : (1ull << used) - 1;
}

} // namespace

BitStrand::BitStrand(std::size_t length) : length_(length), words_(word_count(length), 0) {
    if (length == 0) {
        throw std::invalid_argument("BitStrand: length must be >= 1");
    }
}

BitStrand BitStrand::from_string(std::string_view text) {
    BitStrand strand(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            strand.set_bit(i, true);
        } else if (text[i] != '0') {
            throw std::invalid_argument("BitStrand: text may contain only '0' and '1'");
        }
    }
    return strand;
}

BitStrand BitStrand::random(std::size_t length, RandomSource& rng) {
    BitStrand strand(length);
    for (auto& word : strand.words_) {
        word = rng.next_u64();
    }
    strand.words_.back() &= tail_mask(length);
    return strand;
}

void BitStrand::check_locus(std::size_t locus) const {
    if (locus >= length_) {
        throw std::out_of_range("BitStrand: locus out of range");
    }
}

bool BitStrand::bit(std::size_t locus) const {
    check_locus(locus);
    return (words_[locus / kWordBits] >> (locus % kWordBits)) & 1u;
}

void BitStrand::set_bit(std::size_t locus, bool value) {
    check_locus(locus);
    const std::uint64_t mask = 1ull << (locus % kWordBits);
    if (value) {
        words_[locus / kWordBits] |= mask;
    } else {
        words_[locus / kWordBits] &= ~mask;
    }
}

void BitStrand::flip(std::size_t locus) {
    check_locus(locus);
    words_[locus / kWordBits] ^= 1ull << (locus % kWordBits);
}

BitStrand BitStrand::complemented() const {
    BitStrand result(*this);
    for (auto& word : result.words_) {
        word = ~word;
    }
    result.words_.back() &= tail_mask(length_);
    return result;
}

std::size_t BitStrand::count_ones() const noexcept {
    std::size_t total = 0;
    for (const auto word : words_) {
        total += static_cast<std::size_t>(std::popcount(word));
    }
    return total;
}

std::size_t BitStrand::count_diff(const BitStrand& other) const {
    if (other.length_ != length_) {
        throw std::invalid_argument("BitStrand: length mismatch");
    }
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(words_[w] ^ other.words_[w]));
    }
    return total;
}

std::size_t BitStrand::count_equal(const BitStrand& other) const {
    return length_ - count_diff(other);
}

std::string BitStrand::to_string() const {
    std::string text(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (bit(i)) {
            text[i] = '1';
        }
    }
    return text;
}

} // namespace helixga
