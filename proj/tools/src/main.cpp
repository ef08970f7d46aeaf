#include "commands.hpp"
#include "scenarios.hpp"

#include <CLI11.hpp>

#include <deque>
#include <iostream>

namespace {

using helixga::cli::ConfigError;
using helixga::cli::KeyValues;
using helixga::cli::Manifest;

struct FlagMapping {
    CLI::Option* option;
    std::string key;
    std::string* value;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-helix genetic algorithm workbench: evolve bitstring "
                 "populations, track their aging through the mutation-immune "
                 "second strand, tabulate the flip recurrence, and search for "
                 "1-covering subsets of the hypercube."};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    std::vector<std::string> assignments;
    app.add_option("--config", config_path, "Configuration file of `key = value` lines");
    app.add_option("--out", out_dir, "Directory for the CSV output files");
    app.add_option("--seed", seed, "Master seed; every random draw derives from it");
    app.add_option("--set", assignments, "Override one config key, e.g. --set ga.mutation_rate=0.05")
        ->allow_extra_args(false);

    std::vector<FlagMapping> mappings;
    std::deque<std::string> flag_storage; // stable addresses for CLI11 bindings
    auto map_flag = [&](CLI::App* sub, const std::string& flag, const std::string& key,
                        const std::string& help) {
        std::string* value = &flag_storage.emplace_back();
        CLI::Option* option = sub->add_option(flag, *value, help);
        mappings.push_back({option, key, value});
    };

    CLI::App* run_cmd =
        app.add_subcommand("run", "Run the GA and stop by aging, hard cap or target fitness");
    std::string scenario;
    run_cmd->add_option("--scenario", scenario, "Bundled scenario name (paper-example)");

    CLI::App* dynamics_cmd =
        app.add_subcommand("dynamics", "Tabulate the flip recurrence and its approximation");
    map_flag(dynamics_cmd, "--p", "dynamics.p", "Per-bit flip probability");
    map_flag(dynamics_cmd, "--p0", "dynamics.p0", "Initial probability of state 1");
    map_flag(dynamics_cmd, "--epochs", "dynamics.epochs", "Number of recurrence steps");

    CLI::App* simulate_cmd = app.add_subcommand(
        "simulate", "Monte-Carlo flip simulation with first-passage statistics");
    map_flag(simulate_cmd, "--n-bits", "sim.n_bits", "Bits per trial population");
    map_flag(simulate_cmd, "--p", "sim.p", "Per-bit flip probability");
    map_flag(simulate_cmd, "--epochs", "sim.epochs", "Epochs per trial");
    map_flag(simulate_cmd, "--trials", "sim.trials", "Independent trials");
    map_flag(simulate_cmd, "--threads", "sim.threads", "Worker threads (0 = auto)");

    CLI::App* cover_cmd =
        app.add_subcommand("cover", "Search for 1-covering subsets of the hypercube");
    map_flag(cover_cmd, "--dimension", "cover.dimension", "Hypercube dimension N");
    map_flag(cover_cmd, "--method", "cover.method", "exhaustive, greedy or ga");
    map_flag(cover_cmd, "--subset-size", "cover.subset_size", "Subset size k for the ga method");

    for (CLI::App* sub : {run_cmd, dynamics_cmd, simulate_cmd, cover_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    }

    try {
        // Precedence: defaults < scenario < config file < --set < explicit flags.
        KeyValues config;
        if (!scenario.empty()) {
            helixga::cli::merge_into(config, helixga::cli::parse_config_text(
                                                 helixga::cli::scenario_text(scenario)));
        }
        if (!config_path.empty()) {
            helixga::cli::merge_into(config, helixga::cli::load_config_file(config_path));
        }
        for (const auto& assignment : assignments) {
            helixga::cli::apply_assignment(config, assignment);
        }
        for (const auto& mapping : mappings) {
            if (mapping.option->count() > 0) {
                config.set(mapping.key, *mapping.value);
            }
        }

        Manifest manifest;
        manifest.output_dir = out_dir;
        manifest.config = config;
        manifest.seed = seed;
        if (app.count("--seed") == 0 && config.contains("seed")) {
            manifest.seed = helixga::cli::get_u64(config, "seed", manifest.seed);
        }

        if (run_cmd->parsed()) {
            return helixga::cli::cmd_run(manifest);
        }
        if (dynamics_cmd->parsed()) {
            return helixga::cli::cmd_dynamics(manifest);
        }
        if (simulate_cmd->parsed()) {
            return helixga::cli::cmd_simulate(manifest);
        }
        return helixga::cli::cmd_cover(manifest);
    } catch (const ConfigError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
}
