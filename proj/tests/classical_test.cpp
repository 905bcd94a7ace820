#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpg/classical.hpp"

using namespace qpg::classical;

TEST_CASE("fair games drift to zero") {
    SUBCASE("all-A with p=0.5") {
        const SimResult r = simulate_capital({0.5, 0.5, 0.5}, all_a(), 400, 4000, 99);
        CHECK(std::abs(r.mean_final_capital) <= 3 * r.std_error);
    }
    SUBCASE("all-B with p0=p1=0.5") {
        const SimResult r = simulate_capital({0.5, 0.5, 0.5}, all_b(), 400, 4000, 101);
        CHECK(std::abs(r.mean_final_capital) <= 3 * r.std_error);
    }
}

TEST_CASE("certain winner gains one unit per round") {
    const SimResult r = simulate_capital({1.0, 0.5, 0.5}, all_a(), 100, 50, 7);
    CHECK(r.mean_final_capital == 100.0);
    CHECK(r.std_error == 0.0);
}

TEST_CASE("simulation is bit-reproducible for a fixed seed") {
    const ClassicalParams p{0.48, 0.2, 0.7};
    const SimResult a = simulate_capital(p, pattern_sequence("AABB"), 300, 500, 12345);
    const SimResult b = simulate_capital(p, pattern_sequence("AABB"), 300, 500, 12345);
    CHECK(a.mean_final_capital == b.mean_final_capital);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("exact stationary drift of game B") {
    SUBCASE("capital-independent coin") {
        CHECK(exact_drift_B({0.5, 0.3, 0.3}) == doctest::Approx(2 * 0.3 - 1).epsilon(1e-12));
        CHECK(exact_drift_B({0.5, 0.5, 0.5}) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("canonical literature parameters lose slowly") {
        const double d = exact_drift_B(canonical_preset());
        CHECK(d < 0.0);
        CHECK(d > -0.02);
    }
}

TEST_CASE("stationary drift matches the finite-horizon expectation up to the transient") {
    for (const ClassicalParams p : {ClassicalParams{0.5, 0.095, 0.745},
                                    ClassicalParams{0.5, 0.3, 0.6},
                                    ClassicalParams{0.5, 0.8, 0.25}}) {
        const long rounds = 1000;
        const double exact_total = exact_mean_capital_B(p, rounds);
        const double stationary_total = exact_drift_B(p) * rounds;
        // The transient contributes O(1) capital units in total.
        CHECK(std::abs(exact_total - stationary_total) < 5.0);
    }
}

TEST_CASE("Monte Carlo all-B agrees with the exact chain") {
    const ClassicalParams p{0.5, 0.24, 0.68};
    const SimResult r = simulate_capital(p, all_b(), 1000, 10000, 2024);
    const double exact = exact_mean_capital_B(p, 1000);
    CHECK(std::abs(r.mean_final_capital - exact) <= 3 * r.std_error);
}

TEST_CASE("game A drift is antisymmetric under p -> 1-p") {
    for (double p : {0.3, 0.42}) {
        const SimResult lo = simulate_capital({p, 0.5, 0.5}, all_a(), 500, 5000, 5);
        const SimResult hi = simulate_capital({1 - p, 0.5, 0.5}, all_a(), 500, 5000, 6);
        const double expected = (2 * p - 1) * 500;
        CHECK(std::abs(lo.mean_final_capital - expected) <= 3 * lo.std_error);
        CHECK(std::abs(hi.mean_final_capital + expected) <= 3 * hi.std_error);
    }
}

TEST_CASE("paradox demo") {
    SUBCASE("fair games raise no flag") {
        const ParadoxReport r = paradox_demo({0.5, 0.5, 0.5}, "AABB", 300, 2000, 77);
        CHECK_FALSE(r.paradox);
    }
    SUBCASE("deterministic losing games drift at -1") {
        const ParadoxReport r = paradox_demo({0.0, 0.0, 0.0}, "AABB", 100, 10, 1);
        CHECK(r.drift_a == -1.0);
        CHECK(r.drift_b == -1.0);
        CHECK(r.drift_mixed == -1.0);
        CHECK_FALSE(r.paradox);
    }
    SUBCASE("canonical preset exhibits the paradox") {
        const ParadoxReport r = paradox_demo(canonical_preset(), "AABB", 1000, 10000, 424242);
        CHECK(r.drift_a < 0.0);
        CHECK(r.drift_b < 0.0);
        CHECK(r.drift_mixed > 0.0);
        CHECK(r.paradox);
    }
}

TEST_CASE("report JSON shape") {
    const ParadoxReport r = paradox_demo({0.5, 0.5, 0.5}, "AB", 50, 20, 3);
    const std::string json = paradox_report_to_json(r);
    CHECK(json.find("\"drift_A\":") != std::string::npos);
    CHECK(json.find("\"drift_B\":") != std::string::npos);
    CHECK(json.find("\"drift_mixed\":") != std::string::npos);
    CHECK(json.find("\"stderrs\":{") != std::string::npos);
    CHECK(json.find("\"paradox\":") != std::string::npos);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(simulate_capital({1.5, 0.5, 0.5}, all_a(), 10, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_capital({0.5, 0.5, 0.5}, all_a(), 0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(pattern_sequence(""), std::invalid_argument);
    CHECK_THROWS_AS(pattern_sequence("ABX"), std::invalid_argument);
    CHECK_THROWS_AS(exact_drift_B({0.5, -0.1, 0.5}), std::invalid_argument);
}
