#include "options.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace helixga::cli {

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

namespace {

constexpr std::array<std::string_view, 28> kKnownKeys = {
    "seed",
    "ga.population_size",
    "ga.chromosome_length",
    "ga.mutation_rate",
    "ga.crossover_rate",
    "ga.crossover_points",
    "ga.selection",
    "ga.tournament_size",
    "ga.elitism_count",
    "ga.max_epochs",
    "ga.target_fitness",
    "ga.fraction_threshold",
    "fitness.name",
    "fitness.variables",
    "fitness.bits_per_variable",
    "fitness.lower",
    "fitness.upper",
    "dynamics.p",
    "dynamics.p0",
    "dynamics.epochs",
    "sim.n_bits",
    "sim.p",
    "sim.epochs",
    "sim.trials",
    "sim.threads",
    "cover.dimension",
    "cover.method",
    "cover.subset_size",
};

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

} // namespace

bool KeyValues::is_known_key(std::string_view key) {
    for (const auto known : kKnownKeys) {
        if (known == key) {
            return true;
        }
    }
    return false;
}

void KeyValues::set(std::string key, std::string value) {
    if (!is_known_key(key)) {
        throw ConfigError(key, "unknown configuration key");
    }
    entries_[std::move(key)] = std::move(value);
}

std::optional<std::string> KeyValues::get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

KeyValues parse_config_text(std::string_view text) {
    KeyValues kv;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_number;
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const auto equals = line.find('=');
        if (equals == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_number),
                              "expected `key = value`, got '" + std::string(line) + "'");
        }
        const std::string_view key = trim(line.substr(0, equals));
        const std::string_view value = trim(line.substr(equals + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_number), "empty key");
        }
        kv.set(std::string(key), std::string(value));
        if (end == text.size()) {
            break;
        }
    }
    return kv;
}

KeyValues load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path.string(), "cannot read configuration file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

void apply_assignment(KeyValues& kv, std::string_view assignment) {
    const auto equals = assignment.find('=');
    if (equals == std::string_view::npos || equals == 0) {
        throw ConfigError(std::string(assignment), "expected key=value");
    }
    kv.set(std::string(trim(assignment.substr(0, equals))),
           std::string(trim(assignment.substr(equals + 1))));
}

void merge_into(KeyValues& base, const KeyValues& overrides) {
    for (const auto key : kKnownKeys) {
        const std::string name(key);
        if (const auto value = overrides.get(name)) {
            base.set(name, *value);
        }
    }
}

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
    }
    return value;
}

double parse_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(key, "expected a number, got '" + text + "'");
    }
    return value;
}

} // namespace

std::uint64_t get_u64(const KeyValues& kv, const std::string& key, std::uint64_t fallback) {
    const auto text = kv.get(key);
    return text ? parse_u64(key, *text) : fallback;
}

double get_double(const KeyValues& kv, const std::string& key, double fallback) {
    const auto text = kv.get(key);
    return text ? parse_double(key, *text) : fallback;
}

std::string get_string(const KeyValues& kv, const std::string& key, std::string fallback) {
    const auto text = kv.get(key);
    return text ? *text : std::move(fallback);
}

DynamicsOptions dynamics_options(const KeyValues& kv) {
    DynamicsOptions opts;
    opts.p = get_double(kv, "dynamics.p", opts.p);
    opts.p0 = get_double(kv, "dynamics.p0", opts.p0);
    opts.epochs = get_u64(kv, "dynamics.epochs", opts.epochs);
    if (!(opts.p >= 0.0 && opts.p <= 1.0)) {
        throw ConfigError("dynamics.p", "must be in [0,1]");
    }
    if (!(opts.p0 >= 0.0 && opts.p0 <= 1.0)) {
        throw ConfigError("dynamics.p0", "must be in [0,1]");
    }
    return opts;
}

SimulateOptions simulate_options(const KeyValues& kv) {
    SimulateOptions opts;
    opts.n_bits = get_u64(kv, "sim.n_bits", opts.n_bits);
    opts.p = get_double(kv, "sim.p", opts.p);
    opts.epochs = get_u64(kv, "sim.epochs", opts.epochs);
    opts.trials = get_u64(kv, "sim.trials", opts.trials);
    opts.threads = static_cast<unsigned>(get_u64(kv, "sim.threads", opts.threads));
    if (opts.n_bits == 0) {
        throw ConfigError("sim.n_bits", "must be >= 1");
    }
    if (!(opts.p >= 0.0 && opts.p <= 1.0)) {
        throw ConfigError("sim.p", "must be in [0,1]");
    }
    if (opts.trials == 0) {
        throw ConfigError("sim.trials", "must be >= 1");
    }
    return opts;
}

CoverOptions cover_options(const KeyValues& kv) {
    CoverOptions opts;
    opts.dimension = static_cast<unsigned>(get_u64(kv, "cover.dimension", opts.dimension));
    opts.subset_size = get_u64(kv, "cover.subset_size", opts.subset_size);
    const std::string method = get_string(kv, "cover.method", "exhaustive");
    if (method == "exhaustive") {
        opts.method = CoverMethod::kExhaustive;
    } else if (method == "greedy") {
        opts.method = CoverMethod::kGreedy;
    } else if (method == "ga") {
        opts.method = CoverMethod::kGa;
    } else {
        throw ConfigError("cover.method", "expected exhaustive, greedy or ga, got '" + method + "'");
    }
    if (opts.dimension < 1 || opts.dimension > kSearchCap) {
        throw ConfigError("cover.dimension",
                          "must be in [1, " + std::to_string(kSearchCap) + "]");
    }
    if (opts.subset_size < 1) {
        throw ConfigError("cover.subset_size", "must be >= 1");
    }
    return opts;
}

GaConfig ga_config(const KeyValues& kv, std::uint64_t seed) {
    GaConfig cfg;
    cfg.seed = seed;
    cfg.population_size = get_u64(kv, "ga.population_size", cfg.population_size);
    cfg.chromosome_length = get_u64(kv, "ga.chromosome_length", cfg.chromosome_length);
    cfg.mutation_rate = get_double(kv, "ga.mutation_rate", cfg.mutation_rate);
    cfg.crossover_rate = get_double(kv, "ga.crossover_rate", cfg.crossover_rate);
    cfg.crossover_points = get_u64(kv, "ga.crossover_points", cfg.crossover_points);
    cfg.elitism_count = get_u64(kv, "ga.elitism_count", cfg.elitism_count);
    cfg.fraction_threshold = get_double(kv, "ga.fraction_threshold", cfg.fraction_threshold);
    if (kv.contains("ga.max_epochs")) {
        cfg.max_epochs_override = get_u64(kv, "ga.max_epochs", 0);
    }
    const std::string selection = get_string(kv, "ga.selection", "tournament");
    if (selection == "tournament") {
        cfg.selection.kind = SelectionKind::kTournament;
    } else if (selection == "proportional") {
        cfg.selection.kind = SelectionKind::kFitnessProportional;
    } else {
        throw ConfigError("ga.selection",
                          "expected tournament or proportional, got '" + selection + "'");
    }
    cfg.selection.tournament_size =
        get_u64(kv, "ga.tournament_size", cfg.selection.tournament_size);

    if (cfg.population_size < 2) {
        throw ConfigError("ga.population_size", "must be >= 2");
    }
    if (cfg.chromosome_length < 1) {
        throw ConfigError("ga.chromosome_length", "must be >= 1");
    }
    if (!(cfg.mutation_rate >= 0.0 && cfg.mutation_rate <= 1.0)) {
        throw ConfigError("ga.mutation_rate", "must be in [0,1]");
    }
    if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
        throw ConfigError("ga.crossover_rate", "must be in [0,1]");
    }
    if (cfg.crossover_points < 1 ||
        (cfg.crossover_rate > 0.0 && cfg.crossover_points > cfg.chromosome_length - 1)) {
        throw ConfigError("ga.crossover_points",
                          "must be in [1, chromosome_length - 1]");
    }
    if (cfg.elitism_count > cfg.population_size) {
        throw ConfigError("ga.elitism_count", "must be <= ga.population_size");
    }
    if (cfg.selection.tournament_size < 1) {
        throw ConfigError("ga.tournament_size", "must be >= 1");
    }
    if (!(cfg.fraction_threshold > 0.0 && cfg.fraction_threshold <= 1.0)) {
        throw ConfigError("ga.fraction_threshold", "must be in (0,1]");
    }
    if (cfg.mutation_rate == 0.0 && !cfg.max_epochs_override) {
        throw ConfigError("ga.max_epochs",
                          "required when ga.mutation_rate is 0 (the run would never stop)");
    }
    return cfg;
}

FitnessFunction fitness_function(const KeyValues& kv, GaConfig& cfg) {
    const std::string name = get_string(kv, "fitness.name", "onemax");
    FitnessFunction fitness = [&] {
        if (name == "onemax") {
            return builtin_fitness("onemax");
        }
        BuiltinFitnessParams params;
        params.variables = get_u64(kv, "fitness.variables", params.variables);
        params.bits_per_variable =
            get_u64(kv, "fitness.bits_per_variable", params.bits_per_variable);
        if (kv.contains("fitness.lower")) {
            params.lower = get_double(kv, "fitness.lower", 0.0);
        }
        if (kv.contains("fitness.upper")) {
            params.upper = get_double(kv, "fitness.upper", 0.0);
        }
        try {
            return builtin_fitness(name, params);
        } catch (const std::invalid_argument& error) {
            throw ConfigError("fitness.name", error.what());
        }
    }();

    if (const auto expected = fitness.expected_length()) {
        if (kv.contains("ga.chromosome_length") && cfg.chromosome_length != *expected) {
            throw ConfigError("ga.chromosome_length",
                              "fitness '" + name + "' needs fitness.variables * "
                              "fitness.bits_per_variable = " + std::to_string(*expected) +
                              " loci");
        }
        cfg.chromosome_length = *expected;
    }
    if (kv.contains("ga.target_fitness")) {
        fitness = fitness.with_target(get_double(kv, "ga.target_fitness", 0.0));
    }
    return fitness;
}

} // namespace helixga::cli
