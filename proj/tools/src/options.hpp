#pragma once

#include "helixga/engine.hpp"
#include "helixga/smallworld.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace helixga::cli {

/// A configuration problem the user has to fix: bad grammar, an unknown or
/// malformed key, or a bound violation. Always maps to exit code 2 and the
/// diagnostic names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message);
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Flat store of dotted-key configuration values, validated against the key
/// registry on insertion. Values stay text until a typed getter pulls them.
class KeyValues {
public:
    /// Throws ConfigError for a key outside the registry.
    void set(std::string key, std::string value);
    std::optional<std::string> get(const std::string& key) const;
    bool contains(const std::string& key) const { return entries_.count(key) > 0; }

    static bool is_known_key(std::string_view key);

private:
    std::map<std::string, std::string> entries_;
};

/// Parses `key = value` lines; '#' starts a comment, blank lines are fine.
KeyValues parse_config_text(std::string_view text);

/// Reads and parses a config file; an unreadable path is a ConfigError.
KeyValues load_config_file(const std::filesystem::path& path);

/// Applies one `key=value` override (the --set flag).
void apply_assignment(KeyValues& kv, std::string_view assignment);

/// Later values win: every entry of `overrides` replaces the base entry.
void merge_into(KeyValues& base, const KeyValues& overrides);

std::uint64_t get_u64(const KeyValues& kv, const std::string& key, std::uint64_t fallback);
double get_double(const KeyValues& kv, const std::string& key, double fallback);
std::string get_string(const KeyValues& kv, const std::string& key, std::string fallback);

struct DynamicsOptions {
    double p = 0.03;
    double p0 = 0.0;
    std::uint64_t epochs = 200;
};

struct SimulateOptions {
    std::uint64_t n_bits = 600;
    double p = 0.03;
    std::uint64_t epochs = 400;
    std::uint64_t trials = 1000;
    unsigned threads = 0; // 0 = one worker per hardware thread
};

struct CoverOptions {
    unsigned dimension = 3;
    CoverMethod method = CoverMethod::kExhaustive;
    std::size_t subset_size = 2;
};

DynamicsOptions dynamics_options(const KeyValues& kv);
SimulateOptions simulate_options(const KeyValues& kv);
CoverOptions cover_options(const KeyValues& kv);

/// GA parameters from the ga.* keys, bounds checked with diagnostics that
/// name the dotted key, then re-checked through validate_config.
GaConfig ga_config(const KeyValues& kv, std::uint64_t seed);

/// Builds the fitness function from the fitness.* keys. For the continuous
/// functions the chromosome length is derived as variables *
/// bits_per_variable; an explicitly configured conflicting length is a
/// ConfigError. An explicit ga.target_fitness becomes the stopping target.
FitnessFunction fitness_function(const KeyValues& kv, GaConfig& cfg);

} // namespace helixga::cli
