#include "helixga/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace helixga {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::string optional_epoch(const std::optional<std::uint64_t>& value) {
    return value ? std::to_string(*value) : std::string("none");
}

} // namespace

std::string format_csv_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_theory_csv(const std::filesystem::path& path, const Trajectory& trajectory) {
    auto out = open_csv(path);
    out << "epoch,p_exact,p_approx\n";
    for (std::size_t k = 0; k < trajectory.values.size(); ++k) {
        out << k << ',' << format_csv_double(trajectory.values[k]) << ','
            << format_csv_double(approx_fraction(k, trajectory.config.flip_probability)) << '\n';
    }
}

void write_simulation_csv(const std::filesystem::path& fractions_path,
                          const std::filesystem::path& passages_path,
                          const FlipSimulationResult& result) {
    {
        auto out = open_csv(fractions_path);
        out << "epoch,mean_fraction,std_fraction\n";
        for (std::size_t k = 0; k < result.mean_fraction.size(); ++k) {
            out << k << ',' << format_csv_double(result.mean_fraction[k]) << ','
                << format_csv_double(result.std_fraction[k]) << '\n';
        }
    }
    {
        auto out = open_csv(passages_path);
        out << "trial,first_passage_epoch\n";
        for (std::size_t trial = 0; trial < result.first_passage.size(); ++trial) {
            out << trial << ',' << optional_epoch(result.first_passage[trial]) << '\n';
        }
    }
}

void write_aging_csv(const std::filesystem::path& records_path,
                     const std::filesystem::path& summary_path, const AgingReport& report) {
    {
        auto out = open_csv(records_path);
        out << "epoch,fraction,best_fitness,mean_fitness,evaluations\n";
        for (const auto& record : report.records) {
            out << record.epoch << ',' << format_csv_double(record.mutated_fraction) << ','
                << format_csv_double(record.best_fitness) << ','
                << format_csv_double(record.mean_fitness) << ',' << record.evaluations << '\n';
        }
    }
    {
        auto out = open_csv(summary_path);
        out << "stop_reason,first_passage_epoch,maturity_epoch,hard_cap_epoch,total_evaluations\n";
        out << to_string(report.stop_reason) << ',' << optional_epoch(report.first_passage_epoch)
            << ',' << optional_epoch(report.maturity_epoch) << ','
            << optional_epoch(report.hard_cap_epoch) << ',' << report.total_evaluations << '\n';
    }
}

void write_cover_csv(const std::filesystem::path& path, const Hypercube& cube,
                     std::span<const CoverResult> results) {
    auto out = open_csv(path);
    out << "method,dimension,subset_size,is_cover,vertices\n";
    for (const auto& result : results) {
        out << to_string(result.method) << ',' << cube.dimension() << ',' << result.size << ','
            << (result.is_cover ? "true" : "false") << ',';
        for (std::size_t i = 0; i < result.subset.size(); ++i) {
            if (i > 0) {
                out << '|';
            }
            out << vertex_bits(cube, result.subset[i]);
        }
        out << '\n';
    }
}

} // namespace helixga
