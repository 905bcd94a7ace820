#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qpg/coin.hpp"

using namespace qpg;
using std::numbers::pi;

namespace {

double max_entry_diff(const Coin2& a, const Coin2& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double max_entry_diff(const CoinMatrix& a, const CoinMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("make_su2_coin at the origin") {
    Coin2 c = make_su2_coin({0, 0, 0});
    Coin2 expected;
    expected << 1, 0, 0, -1;
    CHECK(max_entry_diff(c, expected) == 0.0);
}

TEST_CASE("make_su2_coin Hadamard point") {
    Coin2 c = make_su2_coin({0, pi / 4, 0});
    const double r = 1.0 / std::sqrt(2.0);
    Coin2 expected;
    expected << r, r, r, -r;
    CHECK(max_entry_diff(c, expected) < 1e-15);
}

TEST_CASE("make_su2_coin general point") {
    // (pi/2, pi/3, pi/6): direct evaluation of the matrix entries.
    Coin2 c = make_su2_coin({pi / 2, pi / 3, pi / 6});
    const double s34 = std::sqrt(3.0) / 4.0;  // 0.4330127018922193
    Coin2 expected;
    expected << complexd(0, 0.5), complexd(0.75, s34),
                complexd(0.75, -s34), complexd(0, 0.5);
    CHECK(max_entry_diff(c, expected) < 1e-15);
    CHECK(is_unitary(c, 1e-12));
}

TEST_CASE("make_su2_coin rejects non-finite parameters") {
    CHECK_THROWS_AS(make_su2_coin({std::nan(""), 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_su2_coin({0, HUGE_VAL, 0}), std::invalid_argument);
}

TEST_CASE("tensor_coin diagonal cases") {
    Coin2 z;
    z << 1, 0, 0, -1;
    CoinMatrix expected = CoinMatrix::Zero();
    expected.diagonal() << 1, -1, -1, 1;
    CHECK(max_entry_diff(tensor_coin(z), expected) == 0.0);

    // diag(e^{i pi/4}, -e^{-i pi/4}) tensored with itself
    CoinMatrix d = tensor_coin(make_su2_coin({pi / 4, 0, 0}));
    CoinMatrix dexp = CoinMatrix::Zero();
    dexp.diagonal() << complexd(0, 1), -1, -1, complexd(0, -1);
    CHECK(max_entry_diff(d, dexp) < 1e-15);
}

TEST_CASE("tensor_coin of the Hadamard coin") {
    CoinMatrix m = tensor_coin(make_su2_coin({0, pi / 4, 0}));
    CoinMatrix expected;
    expected << 1, 1, 1, 1,
                1, -1, 1, -1,
                1, 1, -1, -1,
                1, -1, -1, 1;
    expected *= 0.5;
    CHECK(max_entry_diff(m, expected) < 1e-15);
}

TEST_CASE("tensor entries follow the (L,R,D,U)=(00,01,10,11) convention") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-2 * pi, 2 * pi);
    for (int trial = 0; trial < 20; ++trial) {
        const CoinParams p{angle(rng), angle(rng), angle(rng)};
        const Coin2 c = make_su2_coin(p);
        const CoinMatrix m = tensor_coin(c);
        for (int i1 = 0; i1 < 2; ++i1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j1 = 0; j1 < 2; ++j1)
                    for (int j2 = 0; j2 < 2; ++j2)
                        CHECK(std::abs(m(2 * i1 + i2, 2 * j1 + j2) - c(i1, j1) * c(i2, j2)) == 0.0);
        // (L,L) entry is e^{2i alpha} cos^2(beta)
        const complexd ll = std::polar(1.0, 2 * p.alpha) * std::cos(p.beta) * std::cos(p.beta);
        CHECK(std::abs(m(0, 0) - ll) < 1e-15);
    }
}

TEST_CASE("unitarity for random parameters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-4 * pi, 4 * pi);
    for (int trial = 0; trial < 100; ++trial) {
        const CoinParams p{angle(rng), angle(rng), angle(rng)};
        CHECK(is_unitary(make_su2_coin(p), 1e-12));
        CHECK(is_unitary(tensor_coin(make_su2_coin(p)), 1e-12));
    }
}

TEST_CASE("parameter periodicity mod 2pi") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 20; ++trial) {
        const CoinParams p{angle(rng), angle(rng), angle(rng)};
        CHECK(max_entry_diff(make_su2_coin(p),
                             make_su2_coin({p.alpha + 2 * pi, p.beta, p.gamma})) < 1e-12);
        CHECK(max_entry_diff(make_su2_coin(p),
                             make_su2_coin({p.alpha, p.beta + 2 * pi, p.gamma})) < 1e-12);
        CHECK(max_entry_diff(make_su2_coin(p),
                             make_su2_coin({p.alpha, p.beta, p.gamma + 2 * pi})) < 1e-12);
    }
}

TEST_CASE("player_coin applies the structural constraints") {
    CoinParams a = player_coin(Player::A, {1.5, pi / 4, -pi});
    CHECK(a.alpha == 0.0);
    CHECK(a.beta == pi / 4);
    CHECK(a.gamma == -pi);

    CoinParams c = player_coin(Player::Cprime, {0.1, pi / 3, -3 * pi / 4});
    CHECK(c.alpha == 3 * pi / 4);
    CHECK(c.gamma == -3 * pi / 4);
    CHECK(c.beta == pi / 3);

    CoinParams d = player_coin(Player::Dprime, {0.7, 0.2, 0.3});
    CHECK(d.alpha == 0.3);
    CHECK(d.beta == 0.2);
    CHECK(d.gamma == 0.3);

    CoinParams b = player_coin(Player::Bprime, {0.4, 0.5, 0.6});
    CHECK(b.gamma == 0.0);
    CHECK(b.alpha == 0.4);
}

TEST_CASE("player_coin is idempotent") {
    const CoinParams free{1.1, 0.4, -2.2};
    for (Player p : {Player::A, Player::Bprime, Player::Cprime, Player::Dprime}) {
        const CoinParams once = player_coin(p, free);
        const CoinParams twice = player_coin(p, once);
        CHECK(once.alpha == twice.alpha);
        CHECK(once.beta == twice.beta);
        CHECK(once.gamma == twice.gamma);
    }
}

TEST_CASE("is_unitary edge cases") {
    CoinMatrix d = CoinMatrix::Zero();
    d.diagonal() << 1, -1, -1, 1;
    CHECK(is_unitary(d, 1e-12));
    CoinMatrix scaled = d;
    scaled(0, 0) *= 1.01;
    CHECK_FALSE(is_unitary(scaled, 1e-12));
    CHECK_THROWS_AS(is_unitary(d, -1.0), std::invalid_argument);
}

TEST_CASE("player string round-trip") {
    for (Player p : {Player::A, Player::Bprime, Player::Cprime, Player::Dprime}) {
        CHECK(player_from_string(to_string(p)) == p);
    }
    CHECK_FALSE(player_from_string("E").has_value());
}
