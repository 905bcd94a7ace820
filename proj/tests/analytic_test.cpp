#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "qpg/analytic.hpp"
#include "qpg/walk.hpp"

using namespace qpg;
using std::numbers::pi;

TEST_CASE("closed-form one-step probabilities at anchor points") {
    SUBCASE("Hadamard point sends everything up") {
        const StepOneProbs p = step1_probabilities({0, pi / 4, 0});
        CHECK(p.p_left == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(p.p_right == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(p.p_down == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(p.p_up == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("alpha=pi/2 beta=pi/4 is uniform") {
        const StepOneProbs p = step1_probabilities({pi / 2, pi / 4, 0});
        CHECK(p.p_left == doctest::Approx(0.25));
        CHECK(p.p_right == doctest::Approx(0.25));
        CHECK(p.p_down == doctest::Approx(0.25));
        CHECK(p.p_up == doctest::Approx(0.25));
    }
    SUBCASE("beta=0 is uniform for any phases") {
        const StepOneProbs p = step1_probabilities({1.3, 0.0, -2.8});
        CHECK(p.p_left == 0.25);
        CHECK(p.p_right == 0.25);
        CHECK(p.p_down == 0.25);
        CHECK(p.p_up == 0.25);
    }
}

TEST_CASE("one-step amplitudes") {
    SUBCASE("Hadamard point") {
        const auto a = step1_amplitudes({0, pi / 4, 0});
        CHECK(std::abs(a[0]) < 1e-15);
        CHECK(std::abs(a[1]) < 1e-15);
        CHECK(std::abs(a[2]) < 1e-15);
        CHECK(std::abs(a[3] - complexd(1, 0)) < 1e-15);
    }
    SUBCASE("beta=0 pure phase coin") {
        const auto a = step1_amplitudes({pi / 4, 0, 0});
        CHECK(std::abs(a[0] - complexd(0, 0.5)) < 1e-15);
        CHECK(std::abs(a[1] - complexd(0.5, 0)) < 1e-15);
        CHECK(std::abs(a[2] - complexd(0.5, 0)) < 1e-15);
        CHECK(std::abs(a[3] - complexd(0, -0.5)) < 1e-15);
    }
}

TEST_CASE("closed-form identities on a grid") {
    const auto grid = param_grid(7, -2 * pi, 2 * pi);
    for (const CoinParams& p : grid) {
        const StepOneProbs probs = step1_probabilities(p);
        const double sum = probs.p_left + probs.p_right + probs.p_down + probs.p_up;
        CHECK(std::abs(sum - 1.0) < 1e-12);
        CHECK(probs.p_right == probs.p_down);

        // Squared amplitudes reproduce the probabilities.
        const auto amps = step1_amplitudes(p);
        CHECK(std::abs(std::norm(amps[0]) - probs.p_left) < 1e-13);
        CHECK(std::abs(std::norm(amps[1]) - probs.p_right) < 1e-13);
        CHECK(std::abs(std::norm(amps[2]) - probs.p_down) < 1e-13);
        CHECK(std::abs(std::norm(amps[3]) - probs.p_up) < 1e-13);

        // p_up - p_left = sin(2b) cos(a-g)
        const double s2b = std::sin(2 * p.beta);
        const double cd = std::cos(p.alpha - p.gamma);
        CHECK(std::abs((probs.p_up - probs.p_left) - s2b * cd) < 1e-13);
        // p_left - p_right = (s c / 2)(s c - 1) with s c = sin(2b) cos(a-g)
        const double sc = s2b * cd;
        CHECK(std::abs((probs.p_left - probs.p_right) - 0.5 * sc * (sc - 1.0)) < 1e-13);
    }
}

TEST_CASE("engine matches the closed forms") {
    SUBCASE("5^3 grid") {
        const auto grid = param_grid(5, -2 * pi, 2 * pi);
        CHECK(check_engine_against_oracle(grid) < 1e-12);
    }
    SUBCASE("single Hadamard point") {
        const CoinParams h{0, pi / 4, 0};
        CHECK(check_engine_against_oracle(std::span(&h, 1)) < 1e-14);
    }
    SUBCASE("beta=0 line") {
        std::vector<CoinParams> line;
        for (int i = 0; i < 9; ++i) line.push_back({-2 * pi + i * pi / 2, 0.0, 1.1});
        CHECK(check_engine_against_oracle(line) < 1e-15);
    }
}

TEST_CASE("empty grid is rejected") {
    const std::vector<CoinParams> empty;
    CHECK_THROWS_AS(check_engine_against_oracle(empty), std::invalid_argument);
}

TEST_CASE("amplitudes match a dense one-step evolution") {
    const auto grid = param_grid(4, -pi, pi);
    for (const CoinParams& p : grid) {
        const WalkState s = step(initial_state(), tensor_coin(make_su2_coin(p)));
        const auto amps = step1_amplitudes(p);
        auto amp_at = [&s](Position pos) {
            auto it = s.amplitudes.find(pos);
            AmpVec v = it == s.amplitudes.end() ? AmpVec::Zero() : it->second;
            complexd total = 0;
            for (int c = 0; c < 4; ++c) total += v[c];
            return total;
        };
        CHECK(std::abs(amp_at({-1, 0}) - amps[0]) < 1e-13);
        CHECK(std::abs(amp_at({1, 0}) - amps[1]) < 1e-13);
        CHECK(std::abs(amp_at({0, -1}) - amps[2]) < 1e-13);
        CHECK(std::abs(amp_at({0, 1}) - amps[3]) < 1e-13);
    }
}
