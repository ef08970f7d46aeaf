#include "helixga/population.hpp"

#include <stdexcept>

namespace helixga {

Population::Population(std::vector<DoubleHelixChromosome> members, std::uint64_t epoch)
    : members_(std::move(members)), epoch_(epoch) {
    if (members_.empty()) {
        throw std::invalid_argument("Population: must hold at least one chromosome");
    }
    const std::size_t length = members_.front().length();
    for (const auto& member : members_) {
        if (member.length() != length) {
            throw std::invalid_argument("Population: members must share one chromosome length");
        }
    }
}

double population_mutated_fraction(const Population& pop) {
    std::uint64_t mutated = 0;
    for (const auto& member : pop.members()) {
        mutated += member.effectively_mutated_count();
    }
    return static_cast<double>(mutated) / static_cast<double>(pop.total_bits());
}

} // namespace helixga
