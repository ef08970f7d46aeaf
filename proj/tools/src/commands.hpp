#pragma once

#include "options.hpp"

#include <cstdint>
#include <filesystem>

namespace helixga::cli {

/// Everything one invocation needs: where to write, the master seed, and the
/// merged configuration (defaults < scenario < file < --set < flags).
struct Manifest {
    std::filesystem::path output_dir = ".";
    std::uint64_t seed = 1;
    KeyValues config;
};

// Each command writes its CSV files into output_dir, prints one
// machine-greppable key=value summary line and returns the process exit code
// (0 success; config problems surface earlier as ConfigError, exit 2).
int cmd_run(const Manifest& manifest);
int cmd_dynamics(const Manifest& manifest);
int cmd_simulate(const Manifest& manifest);
int cmd_cover(const Manifest& manifest);

} // namespace helixga::cli
