#include "test_support.hpp"

#include <doctest.h>

#include <fstream>

using testsupport::parse_csv;
using testsupport::parses_as_double;
using testsupport::parses_as_u64;
using testsupport::read_file;
using testsupport::run_command;
using testsupport::scratch_dir;

namespace {

const std::string kCli = HELIXGA_CLI_PATH;

std::string quoted(const std::filesystem::path& path) {
    return "'" + path.string() + "'";
}

void check_schema(const std::filesystem::path& file, const std::vector<std::string>& header,
                  const std::vector<char>& kinds) {
    const auto rows = parse_csv(read_file(file));
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == header);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        REQUIRE(rows[r].size() == kinds.size());
        for (std::size_t c = 0; c < kinds.size(); ++c) {
            const std::string& field = rows[r][c];
            switch (kinds[c]) {
            case 'u': CHECK(parses_as_u64(field)); break;
            case 'd': CHECK(parses_as_double(field)); break;
            case 'o': CHECK((field == "none" || parses_as_u64(field))); break;
            case 's': CHECK_FALSE(field.empty()); break;
            }
        }
    }
}

} // namespace

TEST_CASE("dynamics subcommand approaches one half from both columns") {
    const auto dir = scratch_dir("cli_dynamics");
    const auto result =
        run_command(kCli + " dynamics --p 0.03 --epochs 200 --out " + quoted(dir) + " --seed 7");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("class=monotone-to-half") != std::string::npos);
    CHECK(result.output.find("limit=0.5") != std::string::npos);

    const auto rows = parse_csv(read_file(dir / "dynamics_theory.csv"));
    REQUIRE(rows.size() == 202);
    const auto& last = rows.back();
    CHECK(std::stod(last[1]) > 0.49);
    CHECK(std::stod(last[2]) > 0.49);
    check_schema(dir / "dynamics_theory.csv", {"epoch", "p_exact", "p_approx"}, {'u', 'd', 'd'});
}

TEST_CASE("cover exhaustive reports the two-point three-bit solution") {
    const auto dir = scratch_dir("cli_cover");
    const auto result =
        run_command(kCli + " cover --dimension 3 --method exhaustive --out " + quoted(dir));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("size=2") != std::string::npos);

    const std::string csv = read_file(dir / "cover.csv");
    CHECK(csv.find("000|111") != std::string::npos);
    check_schema(dir / "cover.csv",
                 {"method", "dimension", "subset_size", "is_cover", "vertices"},
                 {'s', 'u', 'u', 's', 's'});
}

TEST_CASE("run with the bundled scenario prints the reference arithmetic") {
    const auto dir = scratch_dir("cli_run");
    const auto result =
        run_command(kCli + " run --scenario paper-example --out " + quoted(dir) + " --seed 11");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("maturity=17") != std::string::npos);
    CHECK(result.output.find("hard_cap=100") != std::string::npos);
    CHECK(result.output.find("min_rate=0.0016") != std::string::npos);
    CHECK(result.output.find("post_init_evaluations=600") != std::string::npos);
    CHECK(result.output.find("stop_reason=override") != std::string::npos);

    check_schema(dir / "run_report.csv",
                 {"epoch", "fraction", "best_fitness", "mean_fitness", "evaluations"},
                 {'u', 'd', 'd', 'd', 'u'});
    check_schema(dir / "run_summary.csv",
                 {"stop_reason", "first_passage_epoch", "maturity_epoch", "hard_cap_epoch",
                  "total_evaluations"},
                 {'s', 'o', 'o', 'o', 'u'});
}

TEST_CASE("simulate emits both tables with a valid schema") {
    const auto dir = scratch_dir("cli_simulate");
    const auto result = run_command(kCli +
                                    " simulate --n-bits 100 --p 0.05 --epochs 60 --trials 30 "
                                    "--threads 2 --out " +
                                    quoted(dir) + " --seed 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("subcommand=simulate") != std::string::npos);
    check_schema(dir / "simulate_fraction.csv", {"epoch", "mean_fraction", "std_fraction"},
                 {'u', 'd', 'd'});
    check_schema(dir / "simulate_first_passage.csv", {"trial", "first_passage_epoch"},
                 {'u', 'o'});
}

TEST_CASE("configuration problems exit with code 2 and name the key") {
    {
        const auto result = run_command(kCli + " run --set ga.mutation_rate=1.5");
        CHECK(result.exit_code == 2);
        CHECK(result.output.find("ga.mutation_rate") != std::string::npos);
    }
    {
        const auto result = run_command(kCli + " run --set bogus.key=1");
        CHECK(result.exit_code == 2);
        CHECK(result.output.find("bogus.key") != std::string::npos);
    }
    {
        const auto result = run_command(kCli + " run --config /no/such/file.conf");
        CHECK(result.exit_code == 2);
        CHECK(result.output.find("/no/such/file.conf") != std::string::npos);
    }
    {
        const auto result = run_command(kCli + " run --scenario no-such-scenario");
        CHECK(result.exit_code == 2);
    }
}

TEST_CASE("an unwritable output directory is a runtime failure, exit 1") {
    const auto result =
        run_command(kCli + " dynamics --p 0.1 --epochs 5 --out /proc/helixga_nope/out");
    CHECK(result.exit_code == 1);
}

TEST_CASE("an empty config file runs with the defaults") {
    const auto dir = scratch_dir("cli_empty_config");
    const auto config = dir / "empty.conf";
    std::ofstream(config).close();
    const auto result = run_command(kCli + " run --config " + quoted(config) + " --out " +
                                    quoted(dir) + " --seed 2");
    CHECK(result.exit_code == 0);
}

TEST_CASE("a config file below the sensible mutation rate warns but runs") {
    const auto dir = scratch_dir("cli_warning");
    const auto config = dir / "slow.conf";
    {
        std::ofstream out(config);
        out << "ga.mutation_rate = 0.001\nga.max_epochs = 5\n";
    }
    const auto result = run_command(kCli + " run --config " + quoted(config) + " --out " +
                                    quoted(dir));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("warning:") != std::string::npos);
    CHECK(result.output.find("0.00166667") != std::string::npos);
}

TEST_CASE("flags override file values which override defaults") {
    const auto dir = scratch_dir("cli_precedence");
    const auto config = dir / "dyn.conf";
    {
        std::ofstream out(config);
        out << "dynamics.p = 0.25\ndynamics.epochs = 50\n";
    }
    const auto result = run_command(kCli + " dynamics --config " + quoted(config) +
                                    " --p 0.75 --out " + quoted(dir));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("p=0.75") != std::string::npos); // flag wins
    CHECK(result.output.find("epochs=50") != std::string::npos); // file wins over default
    CHECK(result.output.find("class=oscillatory-to-half") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical CSV output") {
    const auto dir_a = scratch_dir("cli_det_a");
    const auto dir_b = scratch_dir("cli_det_b");
    const std::string args = " run --scenario paper-example --seed 123 --out ";
    CHECK(run_command(kCli + args + quoted(dir_a)).exit_code == 0);
    CHECK(run_command(kCli + args + quoted(dir_b)).exit_code == 0);
    CHECK(read_file(dir_a / "run_report.csv") == read_file(dir_b / "run_report.csv"));
    CHECK(read_file(dir_a / "run_summary.csv") == read_file(dir_b / "run_summary.csv"));
}

TEST_CASE("simulate output is independent of the worker count") {
    const auto dir_a = scratch_dir("cli_threads_a");
    const auto dir_b = scratch_dir("cli_threads_b");
    const std::string base = " simulate --n-bits 80 --p 0.04 --epochs 40 --trials 20 --seed 9";
    CHECK(run_command(kCli + base + " --threads 1 --out " + quoted(dir_a)).exit_code == 0);
    CHECK(run_command(kCli + base + " --threads 6 --out " + quoted(dir_b)).exit_code == 0);
    CHECK(read_file(dir_a / "simulate_fraction.csv") ==
          read_file(dir_b / "simulate_fraction.csv"));
    CHECK(read_file(dir_a / "simulate_first_passage.csv") ==
          read_file(dir_b / "simulate_first_passage.csv"));
}
