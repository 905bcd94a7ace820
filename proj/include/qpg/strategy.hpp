#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpg/coin.hpp"
#include "qpg/game.hpp"
#include "qpg/walk.hpp"

namespace qpg {

enum class StrategyKind { Solo, AlternatingLevelI, CombinedPerStep };

/// Ordered list of per-step 4x4 coins plus a human-readable description of
/// each entry, e.g. "A(alpha=0,beta=0.7854,gamma=-3.1416)".
struct Schedule {
    std::vector<CoinMatrix> coins;
    std::vector<std::string> provenance;
};

struct StrategySpec {
    StrategyKind kind = StrategyKind::Solo;
    std::vector<Player> players;                 // distinct; first listed acts first
    std::map<Player, CoinParams> free_params;    // free parameters per player
    int steps = 0;
    bool cooperation_level_two = false;          // when true, free params must be equal
};

/// `steps` copies of the single player's coin.
Schedule build_solo(const StrategySpec& spec);

/// Cycles through the players' coins one per step; requires steps divisible
/// by the player count so every coin is used equally.
Schedule build_alternating(const StrategySpec& spec);

/// Every entry is the product of the players' coins, with the first-listed
/// player acting first on the state (rightmost factor).
Schedule build_combined(const StrategySpec& spec);

/// Dispatch on spec.kind.
Schedule build_schedule(const StrategySpec& spec);

struct GameResult {
    Verdict verdict;
    Distribution distribution;
};

/// Evolves the fixed initial state under the built schedule, then decides
/// winners from the final distribution's marginals.
GameResult run_game(const StrategySpec& spec, double tol, VerdictMode mode);

}  // namespace qpg
