#pragma once

#include "helixga/engine.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace helixga {

/// Hypercube vertex, the integer whose bit pattern is the chromosome.
using Vertex = std::uint32_t;

/// Dimension cap for the exact minimum search: subset enumeration explodes
/// past N = 4 on a desk machine.
inline constexpr unsigned kExhaustiveCap = 4;
/// Dimension cap for greedy and GA search (2^20 vertex universe).
inline constexpr unsigned kSearchCap = 20;

/// The N-dimensional hypercube: 2^N vertices, the search universe of N-bit
/// chromosomes. Its diameter is N, which is also log2 of the vertex count —
/// the small-world property that keeps evolutionary search distances short.
class Hypercube {
public:
    explicit Hypercube(unsigned dimension);

    unsigned dimension() const noexcept { return dimension_; }
    std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << dimension_; }
    bool contains(Vertex v) const noexcept { return v < vertex_count(); }

private:
    unsigned dimension_;
};

/// Number of differing bit positions. Throws std::invalid_argument when a
/// vertex is out of range for the cube.
unsigned hamming_distance(const Hypercube& cube, Vertex a, Vertex b);

/// Mean Hamming distance over all unordered pairs of the sample
/// (needs at least two vertices).
double average_pairwise_distance(const Hypercube& cube, std::span<const Vertex> sample);

/// Number of cube vertices within Hamming distance 1 of some subset member.
std::uint64_t covered_count(const Hypercube& cube, std::span<const Vertex> subset);

/// True iff every cube vertex lies within Hamming distance 1 of some subset
/// member. The subset must be non-empty; duplicates are allowed and harmless.
bool is_dominating(const Hypercube& cube, std::span<const Vertex> subset);

enum class CoverMethod { kExhaustive, kGreedy, kGa };
std::string_view to_string(CoverMethod method);

struct CoverResult {
    std::vector<Vertex> subset;
    std::size_t size = 0;
    bool is_cover = false;
    CoverMethod method = CoverMethod::kGreedy;
    bool optimal = false; // true only for exhaustive results
};

/// Exact minimum search by enumerating subsets in increasing size order.
struct MinimumCoverSearch {
    std::size_t size = 0;                     // minimum dominating set cardinality
    std::vector<std::vector<Vertex>> subsets; // every dominating set of that size
};

/// Exhaustive minimum dominating sets of the cube. Returns the minimum
/// cardinality together with all subsets achieving it. Throws
/// std::domain_error above `cap`, pointing the caller to greedy_cover or
/// ga_cover instead.
MinimumCoverSearch minimum_dominating_sets(const Hypercube& cube, unsigned cap = kExhaustiveCap);

/// Greedy cover: repeatedly pick the vertex covering the most yet-uncovered
/// vertices, ties broken by the smallest vertex value. Always returns a valid
/// cover; its size is at least the exact minimum.
CoverResult greedy_cover(const Hypercube& cube, unsigned cap = kSearchCap);

/// GA search for a covering subset of fixed size k: a candidate is k
/// concatenated N-bit vertex fields in one visible strand, scored by the
/// number of cube vertices it covers (full coverage 2^N stops the run early).
/// The engine config's chromosome length is replaced by k*N; duplicates
/// inside a candidate are allowed and simply waste coverage.
CoverResult ga_cover(const Hypercube& cube, std::size_t subset_size, const GaConfig& cfg);

/// The k vertices encoded in a visible strand of length k*N (MSB first per
/// field), as used by ga_cover.
std::vector<Vertex> decode_vertex_fields(const BitStrand& strand, unsigned dimension);

/// Bit-string form of a vertex, most significant bit leftmost, N characters.
std::string vertex_bits(const Hypercube& cube, Vertex v);

} // namespace helixga
