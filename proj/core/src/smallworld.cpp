#include "helixga/smallworld.hpp"

#include "helixga/rng.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace helixga {

Hypercube::Hypercube(unsigned dimension) : dimension_(dimension) {
    if (dimension < 1 || dimension > kSearchCap) {
        throw std::invalid_argument("Hypercube: dimension must be in [1, " +
                                    std::to_string(kSearchCap) + "]");
    }
}

namespace {

void check_vertex(const Hypercube& cube, Vertex v) {
    if (!cube.contains(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for dimension " +
                                    std::to_string(cube.dimension()));
    }
}

} // namespace

unsigned hamming_distance(const Hypercube& cube, Vertex a, Vertex b) {
    check_vertex(cube, a);
    check_vertex(cube, b);
    return static_cast<unsigned>(std::popcount(a ^ b));
}

double average_pairwise_distance(const Hypercube& cube, std::span<const Vertex> sample) {
    if (sample.size() < 2) {
        throw std::invalid_argument("average_pairwise_distance: need at least two vertices");
    }
    for (const Vertex v : sample) {
        check_vertex(cube, v);
    }
    // Sum over unordered pairs equals sum over bit positions of ones * zeros.
    const std::size_t n = sample.size();
    std::uint64_t total = 0;
    for (unsigned bit = 0; bit < cube.dimension(); ++bit) {
        std::uint64_t ones = 0;
        for (const Vertex v : sample) {
            ones += (v >> bit) & 1u;
        }
        total += ones * (static_cast<std::uint64_t>(n) - ones);
    }
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return static_cast<double>(total) / pairs;
}

namespace {

class CoverageMarks {
public:
    explicit CoverageMarks(const Hypercube& cube)
        : cube_(cube), words_((cube.vertex_count() + 63) / 64, 0) {}

    void mark_ball(Vertex v) {
        set(v);
        for (unsigned bit = 0; bit < cube_.dimension(); ++bit) {
            set(v ^ (Vertex{1} << bit));
        }
    }

    std::uint64_t count() const {
        std::uint64_t total = 0;
        for (const auto word : words_) {
            total += static_cast<std::uint64_t>(std::popcount(word));
        }
        return total;
    }

    bool covers_all() const { return count() == cube_.vertex_count(); }

private:
    void set(Vertex v) { words_[v >> 6] |= 1ull << (v & 63); }

    const Hypercube& cube_;
    std::vector<std::uint64_t> words_;
};

} // namespace

std::uint64_t covered_count(const Hypercube& cube, std::span<const Vertex> subset) {
    if (subset.empty()) {
        throw std::invalid_argument("covered_count: subset must be non-empty");
    }
    CoverageMarks marks(cube);
    for (const Vertex v : subset) {
        check_vertex(cube, v);
        marks.mark_ball(v);
    }
    return marks.count();
}

bool is_dominating(const Hypercube& cube, std::span<const Vertex> subset) {
    return covered_count(cube, subset) == cube.vertex_count();
}

std::string_view to_string(CoverMethod method) {
    switch (method) {
    case CoverMethod::kExhaustive: return "exhaustive";
    case CoverMethod::kGreedy: return "greedy";
    case CoverMethod::kGa: return "ga";
    }
    return "unknown";
}

MinimumCoverSearch minimum_dominating_sets(const Hypercube& cube, unsigned cap) {
    if (cube.dimension() > cap || cube.dimension() > 6) {
        throw std::domain_error(
            "minimum_dominating_sets: dimension " + std::to_string(cube.dimension()) +
            " exceeds the exhaustive cap " + std::to_string(std::min(cap, 6u)) +
            "; use greedy_cover or ga_cover");
    }
    const std::size_t vertices = static_cast<std::size_t>(cube.vertex_count());
    const std::uint64_t full =
        vertices == 64 ? ~0ull : (std::uint64_t{1} << vertices) - 1;

    // Closed-ball masks: ball(v) covers v and its N neighbors.
    std::vector<std::uint64_t> ball(vertices, 0);
    for (std::size_t v = 0; v < vertices; ++v) {
        ball[v] = std::uint64_t{1} << v;
        for (unsigned bit = 0; bit < cube.dimension(); ++bit) {
            ball[v] |= std::uint64_t{1} << (v ^ (std::size_t{1} << bit));
        }
    }

    MinimumCoverSearch result;
    std::vector<std::size_t> pick;
    std::vector<std::vector<Vertex>> found;

    // Enumerate size-s combinations in lexicographic order.
    auto search = [&](auto&& self, std::size_t next, std::size_t remaining,
                      std::uint64_t covered) -> void {
        if (remaining == 0) {
            if (covered == full) {
                std::vector<Vertex> subset(pick.begin(), pick.end());
                found.push_back(std::move(subset));
            }
            return;
        }
        for (std::size_t v = next; v + remaining <= vertices; ++v) {
            pick.push_back(v);
            self(self, v + 1, remaining - 1, covered | ball[v]);
            pick.pop_back();
        }
    };

    for (std::size_t size = 1; size <= vertices; ++size) {
        found.clear();
        search(search, 0, size, 0);
        if (!found.empty()) {
            result.size = size;
            result.subsets = std::move(found);
            return result;
        }
    }
    throw std::logic_error("minimum_dominating_sets: full vertex set must dominate");
}

CoverResult greedy_cover(const Hypercube& cube, unsigned cap) {
    if (cube.dimension() > cap) {
        throw std::domain_error("greedy_cover: dimension " + std::to_string(cube.dimension()) +
                                " exceeds the cap " + std::to_string(cap));
    }
    const std::size_t vertices = static_cast<std::size_t>(cube.vertex_count());
    std::vector<bool> covered(vertices, false);
    std::vector<unsigned> gain(vertices, cube.dimension() + 1);
    std::size_t uncovered = vertices;

    // Max-heap on (gain, smallest vertex) with lazy re-push of stale entries.
    struct Entry {
        unsigned gain;
        Vertex vertex;
        bool operator<(const Entry& other) const {
            if (gain != other.gain) {
                return gain < other.gain;
            }
            return vertex > other.vertex;
        }
    };
    std::priority_queue<Entry> heap;
    for (std::size_t v = 0; v < vertices; ++v) {
        heap.push({gain[v], static_cast<Vertex>(v)});
    }

    auto for_each_in_ball = [&](Vertex v, auto&& fn) {
        fn(v);
        for (unsigned bit = 0; bit < cube.dimension(); ++bit) {
            fn(static_cast<Vertex>(v ^ (Vertex{1} << bit)));
        }
    };

    CoverResult result;
    result.method = CoverMethod::kGreedy;
    while (uncovered > 0) {
        const Entry top = heap.top();
        heap.pop();
        if (top.gain != gain[top.vertex]) {
            heap.push({gain[top.vertex], top.vertex});
            continue;
        }
        result.subset.push_back(top.vertex);
        for_each_in_ball(top.vertex, [&](Vertex u) {
            if (!covered[u]) {
                covered[u] = true;
                --uncovered;
                for_each_in_ball(u, [&](Vertex w) { --gain[w]; });
            }
        });
    }
    result.size = result.subset.size();
    result.is_cover = true;
    result.optimal = false;
    return result;
}

std::vector<Vertex> decode_vertex_fields(const BitStrand& strand, unsigned dimension) {
    if (dimension < 1 || strand.length() % dimension != 0) {
        throw std::invalid_argument("decode_vertex_fields: strand length must be k * dimension");
    }
    const std::size_t fields = strand.length() / dimension;
    std::vector<Vertex> vertices;
    vertices.reserve(fields);
    for (std::size_t f = 0; f < fields; ++f) {
        Vertex v = 0;
        for (unsigned b = 0; b < dimension; ++b) {
            v = static_cast<Vertex>((v << 1) | strand.bit(f * dimension + b));
        }
        vertices.push_back(v);
    }
    return vertices;
}

std::string vertex_bits(const Hypercube& cube, Vertex v) {
    check_vertex(cube, v);
    std::string text(cube.dimension(), '0');
    for (unsigned bit = 0; bit < cube.dimension(); ++bit) {
        if ((v >> (cube.dimension() - 1 - bit)) & 1u) {
            text[bit] = '1';
        }
    }
    return text;
}

CoverResult ga_cover(const Hypercube& cube, std::size_t subset_size, const GaConfig& cfg) {
    if (subset_size < 1 || subset_size > cube.vertex_count()) {
        throw std::invalid_argument("ga_cover: subset size must be in [1, 2^N]");
    }
    const unsigned dimension = cube.dimension();

    GaConfig search_cfg = cfg;
    search_cfg.chromosome_length = subset_size * dimension;

    auto coverage = [dimension](const BitStrand& strand) {
        const Hypercube local(dimension);
        CoverageMarks marks(local);
        for (const Vertex v : decode_vertex_fields(strand, dimension)) {
            marks.mark_ball(v);
        }
        return static_cast<double>(marks.count());
    };
    FitnessFunction fitness("cover-coverage", coverage,
                            static_cast<double>(cube.vertex_count()),
                            search_cfg.chromosome_length);

    const AgingReport report = run(search_cfg, fitness);

    CoverResult result;
    result.method = CoverMethod::kGa;
    result.subset = decode_vertex_fields(*report.best_visible, dimension);
    result.size = result.subset.size();
    result.is_cover = is_dominating(cube, result.subset);
    result.optimal = false;
    return result;
}

} // namespace helixga
