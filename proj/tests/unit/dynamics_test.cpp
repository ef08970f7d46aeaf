#include "helixga/dynamics.hpp"
#include "helixga/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using helixga::ConvergenceClass;
using helixga::DynamicsConfig;
using helixga::RandomSource;
using helixga::Trajectory;

TEST_CASE("recurrence_step pinned values") {
    CHECK(helixga::recurrence_step(0.3, 1.0) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(helixga::recurrence_step(0.2, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(helixga::recurrence_step(0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(helixga::recurrence_step(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(helixga::recurrence_step(0.5, 1.1), std::invalid_argument);
}

TEST_CASE("iterate reproduces hand-iterated values for p = 0.1") {
    const auto trajectory = helixga::iterate({0.1, 0.0}, 3);
    REQUIRE(trajectory.values.size() == 4);
    CHECK(trajectory.values[0] == 0.0);
    CHECK(trajectory.values[1] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(trajectory.values[2] == doctest::Approx(0.18).epsilon(1e-12));
    CHECK(trajectory.values[3] == doctest::Approx(0.244).epsilon(1e-12));
}

TEST_CASE("iterate endpoints: p = 1 oscillates, p = 0 stays put") {
    const auto flip = helixga::iterate({1.0, 0.0}, 5);
    for (std::size_t k = 0; k < flip.values.size(); ++k) {
        CHECK(flip.values[k] == (k % 2 == 0 ? 0.0 : 1.0));
    }
    const auto still = helixga::iterate({0.0, 0.0}, 5);
    for (const double value : still.values) {
        CHECK(value == 0.0);
    }
}

TEST_CASE("limit_of") {
    CHECK(helixga::limit_of({0.03, 0.0}) == 0.5);
    CHECK(helixga::limit_of({0.0, 0.0}) == 0.0);
    CHECK(helixga::limit_of({0.0, 0.25}) == 0.25);
    CHECK_FALSE(helixga::limit_of({1.0, 0.0}).has_value());
    CHECK(helixga::limit_of({1.0, 0.5}) == 0.5);
}

TEST_CASE("classify covers the full taxonomy") {
    CHECK(helixga::classify({0.0, 0.0}) == ConvergenceClass::kConstant);
    CHECK(helixga::classify({0.25, 0.0}) == ConvergenceClass::kMonotoneToHalf);
    CHECK(helixga::classify({0.5, 0.0}) == ConvergenceClass::kConstantAtHalf);
    CHECK(helixga::classify({0.75, 0.0}) == ConvergenceClass::kOscillatoryToHalf);
    CHECK(helixga::classify({1.0, 0.0}) == ConvergenceClass::kPeriodTwo);
    CHECK(helixga::to_string(ConvergenceClass::kMonotoneToHalf) == "monotone-to-half");
}

TEST_CASE("classification matches iterated behavior over 1000 steps") {
    RandomSource rng(314);
    for (int i = 0; i < 40; ++i) {
        DynamicsConfig config{rng.next_double(), 0.0};
        if (i == 0) config.flip_probability = 0.0;
        if (i == 1) config.flip_probability = 0.5;
        if (i == 2) config.flip_probability = 1.0;
        const auto kind = helixga::classify(config);
        const auto trajectory = helixga::iterate(config, 1000);
        const auto& v = trajectory.values;
        switch (kind) {
        case ConvergenceClass::kConstant:
            for (const double value : v) CHECK(value == v[0]);
            break;
        case ConvergenceClass::kConstantAtHalf:
            for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k] == 0.5);
            break;
        case ConvergenceClass::kPeriodTwo:
            for (std::size_t k = 0; k + 2 < v.size(); ++k) CHECK(v[k + 2] == v[k]);
            break;
        case ConvergenceClass::kMonotoneToHalf:
            for (std::size_t k = 0; k + 1 < v.size(); ++k) {
                if (std::abs(v[k] - 0.5) < 1e-15) break;
                CHECK(v[k + 1] >= v[k]); // p0 = 0 approaches 1/2 from below
                CHECK(v[k + 1] <= 0.5);
            }
            break;
        case ConvergenceClass::kOscillatoryToHalf:
            for (std::size_t k = 1; k + 1 < v.size(); ++k) {
                if (std::abs(v[k] - 0.5) < 1e-12) break;
                CHECK((v[k] - 0.5) * (v[k + 1] - 0.5) <= 0.0);
            }
            break;
        }
    }
}

TEST_CASE("convergence reaches 1e-9 of the limit within 1e6 steps across the p range") {
    for (const double p : {0.001, 0.01, 0.1, 0.3, 0.49, 0.51, 0.7, 0.9, 0.99, 0.999}) {
        double value = 0.0;
        std::size_t steps = 0;
        while (std::abs(value - 0.5) >= 1e-9) {
            value = helixga::recurrence_step(value, p);
            ++steps;
            REQUIRE(steps <= 1000000);
        }
        CHECK(steps < 1000000);
    }
}

TEST_CASE("approx_fraction pinned values") {
    CHECK(helixga::approx_fraction(0, 0.3) == 0.0);
    // at k = 1/(2p) the approximation evaluates to (1 - 1/e)/2
    CHECK(helixga::approx_fraction(10, 0.05) ==
          doctest::Approx(0.5 * (1.0 - std::exp(-1.0))).epsilon(1e-12));
    CHECK(helixga::approx_fraction(10, 0.05) == doctest::Approx(0.31606).epsilon(1e-4));
}

TEST_CASE("approximation stays within 0.02 of the iterated oracle for small p") {
    for (const double p : {0.005, 0.01, 0.02, 0.03, 0.05}) {
        const auto epochs = static_cast<std::size_t>(std::ceil(10.0 / p));
        const auto trajectory = helixga::iterate({p, 0.0}, epochs);
        double worst = 0.0;
        for (std::size_t k = 0; k < trajectory.values.size(); ++k) {
            worst = std::max(worst,
                             std::abs(trajectory.values[k] - helixga::approx_fraction(k, p)));
        }
        CHECK(worst <= 0.02);
    }
}

TEST_CASE("maturity_epoch") {
    CHECK(helixga::maturity_epoch(0.03) == 17);
    CHECK(helixga::maturity_epoch(0.5) == 1);
    CHECK(helixga::maturity_epoch(0.005) == 100);
    CHECK_THROWS_AS(helixga::maturity_epoch(0.0), std::invalid_argument);
    CHECK_THROWS_AS(helixga::maturity_epoch(-0.2), std::invalid_argument);
    CHECK_THROWS_AS(helixga::maturity_epoch(1.5), std::invalid_argument);
}

TEST_CASE("old_age_epoch") {
    CHECK(helixga::old_age_epoch(0.03) == 100);
    CHECK(helixga::old_age_epoch(1.0) == 3);
    CHECK(helixga::old_age_epoch(0.0017) == 1765);
    CHECK_THROWS_AS(helixga::old_age_epoch(3.0), std::invalid_argument);
    CHECK_THROWS_AS(helixga::old_age_epoch(0.0), std::invalid_argument);
}

TEST_CASE("min_mutation_rate") {
    CHECK(helixga::min_mutation_rate(600) == doctest::Approx(0.0016667).epsilon(1e-4));
    CHECK(helixga::min_mutation_rate(1) == 1.0);
    CHECK(helixga::min_mutation_rate(1000000) == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK_THROWS_AS(helixga::min_mutation_rate(0), std::invalid_argument);
}

// ---- trajectory invariants --------------------------------------------------

TEST_CASE("property: consecutive trajectory values satisfy the recurrence exactly") {
    RandomSource rng(271);
    for (int i = 0; i < 200; ++i) {
        const DynamicsConfig config{rng.next_double(), rng.next_double()};
        const auto trajectory = helixga::iterate(config, 200);
        const double p = config.flip_probability;
        for (std::size_t k = 0; k + 1 < trajectory.values.size(); ++k) {
            const double expected = (1.0 - 2.0 * p) * trajectory.values[k] + p;
            CHECK(std::abs(trajectory.values[k + 1] - expected) <= 1e-12);
            CHECK(trajectory.values[k] >= 0.0);
            CHECK(trajectory.values[k] <= 1.0);
        }
    }
}

TEST_CASE("property: contraction toward 1/2 for 0 < p < 1") {
    RandomSource rng(272);
    for (int i = 0; i < 200; ++i) {
        double p = rng.next_double();
        if (p == 0.0 || p == 1.0) {
            p = 0.37;
        }
        const DynamicsConfig config{p, rng.next_double()};
        const auto trajectory = helixga::iterate(config, 100);
        const double factor = std::abs(1.0 - 2.0 * p);
        for (std::size_t k = 0; k + 1 < trajectory.values.size(); ++k) {
            CHECK(std::abs(trajectory.values[k + 1] - 0.5) <=
                  factor * std::abs(trajectory.values[k] - 0.5) + 1e-15);
        }
    }
}

TEST_CASE("property: strict monotone growth below 1/2") {
    for (const double p : {0.001, 0.05, 0.25, 0.49}) {
        const auto trajectory = helixga::iterate({p, 0.0}, 2000);
        for (std::size_t k = 0; k + 1 < trajectory.values.size(); ++k) {
            if (std::abs(trajectory.values[k] - 0.5) < 1e-15) {
                break;
            }
            CHECK(trajectory.values[k + 1] > trajectory.values[k]);
        }
    }
}

// ---- flip simulation ---------------------------------------------------------

TEST_CASE("simulate_flip_fraction endpoints") {
    RandomSource rng(55);
    const auto still = helixga::simulate_flip_fraction(50, 0.0, 20, 10, rng);
    for (const double mean : still.mean_fraction) {
        CHECK(mean == 0.0);
    }
    CHECK(still.passage_count() == 0);
    CHECK_FALSE(still.median_first_passage().has_value());

    const auto flip = helixga::simulate_flip_fraction(50, 1.0, 3, 10, rng);
    CHECK(flip.mean_fraction[1] == 1.0);
    for (const auto& passage : flip.first_passage) {
        REQUIRE(passage.has_value());
        CHECK(*passage == 1);
    }
    CHECK(flip.median_first_passage() == 1.0);
}

TEST_CASE("simulate_flip_fraction argument validation") {
    RandomSource rng(56);
    CHECK_THROWS_AS(helixga::simulate_flip_fraction(0, 0.1, 5, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(helixga::simulate_flip_fraction(5, 0.1, 5, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(helixga::simulate_flip_fraction(5, 1.2, 5, 5, rng), std::invalid_argument);
}

TEST_CASE("simulated mean fraction tracks the recurrence within 3 sigma") {
    RandomSource rng(1234);
    const std::uint64_t n_bits = 256;
    const double p = 0.05;
    const std::uint64_t epochs = 80;
    const std::uint64_t trials = 400;
    const auto result = helixga::simulate_flip_fraction(n_bits, p, epochs, trials, rng, 2);
    const auto theory = helixga::iterate({p, 0.0}, epochs);
    for (std::size_t k = 0; k <= epochs; ++k) {
        const double expected = theory.values[k];
        const double sigma =
            std::sqrt(expected * (1.0 - expected) / static_cast<double>(n_bits * trials));
        CHECK(std::abs(result.mean_fraction[k] - expected) <= 3.0 * sigma + 1e-12);
    }
}

TEST_CASE("simulation output does not depend on the worker count") {
    RandomSource serial(77);
    RandomSource parallel(77);
    const auto a = helixga::simulate_flip_fraction(128, 0.04, 50, 60, serial, 1);
    const auto b = helixga::simulate_flip_fraction(128, 0.04, 50, 60, parallel, 5);
    CHECK(a.mean_fraction == b.mean_fraction);
    CHECK(a.std_fraction == b.std_fraction);
    CHECK(a.first_passage == b.first_passage);
}

TEST_CASE("first passage quartiles interpolate order statistics") {
    helixga::FlipSimulationResult result;
    result.first_passage = {std::uint64_t{10}, std::uint64_t{20}, std::uint64_t{30},
                            std::uint64_t{40}, std::nullopt};
    CHECK(result.passage_count() == 4);
    CHECK(result.median_first_passage() == doctest::Approx(25.0));
    CHECK(result.first_passage_quartile(0.25) == doctest::Approx(17.5));
    CHECK(result.first_passage_quartile(0.75) == doctest::Approx(32.5));
}
