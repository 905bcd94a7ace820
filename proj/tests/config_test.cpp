#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpg/config.hpp"

using namespace qpg;

TEST_CASE("flat key/value scenario") {
    const std::string text = R"(
# two-player combined game
kind = combined
players = A, Bprime
steps = 10
tol = 1e-8
mode = strict

[player.A]
beta = 0.785398
gamma = -3.5

[player.Bprime]
alpha = 2.5
beta = 0.785398
)";
    const ScenarioConfig cfg = parse_scenario(text);
    CHECK(cfg.spec.kind == StrategyKind::CombinedPerStep);
    REQUIRE(cfg.spec.players.size() == 2);
    CHECK(cfg.spec.players[0] == Player::A);
    CHECK(cfg.spec.players[1] == Player::Bprime);
    CHECK(cfg.spec.steps == 10);
    CHECK(cfg.tol == 1e-8);
    CHECK(cfg.mode == VerdictMode::StrictFourWay);
    CHECK(cfg.spec.free_params.at(Player::A).gamma == -3.5);
    CHECK(cfg.spec.free_params.at(Player::Bprime).alpha == 2.5);
}

TEST_CASE("JSON scenario") {
    const std::string text = R"({
  "kind": "solo",
  "players": ["A"],
  "steps": 4,
  "player": {"A": {"beta": 0.5, "gamma": -3.0}}
})";
    const ScenarioConfig cfg = parse_scenario(text);
    CHECK(cfg.spec.kind == StrategyKind::Solo);
    CHECK(cfg.spec.steps == 4);
    CHECK(cfg.spec.free_params.at(Player::A).beta == 0.5);
    CHECK(cfg.tol == 1e-9);  // default
}

TEST_CASE("eps values resolve against epsilon_min") {
    const std::string text = R"(
kind = alternating
players = A, Bprime
steps = 4
epsilon_min = 0.002

[player.A]
beta = 0.7
gamma = eps

[player.Bprime]
alpha = -eps
beta = 0.7
)";
    const ScenarioConfig cfg = parse_scenario(text);
    CHECK(cfg.spec.free_params.at(Player::A).gamma == 0.002);
    CHECK(cfg.spec.free_params.at(Player::Bprime).alpha == -0.002);
}

TEST_CASE("malformed configs are rejected") {
    CHECK_THROWS_AS(parse_scenario(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("kind = solo\n"), std::invalid_argument);  // missing players
    CHECK_THROWS_AS(parse_scenario("kind = waltz\nplayers = A\nsteps = 1\n[player.A]\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("kind = solo\nplayers = E\nsteps = 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("kind = solo\nplayers = A\nsteps = 1\n"),
                    std::invalid_argument);  // missing player section
    CHECK_THROWS_AS(parse_scenario("kind = solo\nplayers = A\nsteps = -2\n[player.A]\nbeta=1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("{\"kind\": \"solo\",,}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("kind = solo\nplayers = A\nsteps = 1\n[player.A]\nbetta = 1\n"),
                    std::invalid_argument);
}

TEST_CASE("level_two flag round-trips") {
    const std::string text = R"(
kind = alternating
players = A, Bprime
steps = 2
level_two = true

[player.A]
alpha = 1.0
beta = 0.5
gamma = 1.0

[player.Bprime]
alpha = 1.0
beta = 0.5
gamma = 1.0
)";
    CHECK(parse_scenario(text).spec.cooperation_level_two);
}
