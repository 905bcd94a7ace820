#include "qpg/strategy.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

namespace qpg {

namespace {

std::string describe(Player p, const CoinParams& constrained) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s(alpha=%.6g,beta=%.6g,gamma=%.6g)",
                  std::string(to_string(p)).c_str(), constrained.alpha,
                  constrained.beta, constrained.gamma);
    return buf;
}

const CoinParams& free_params_for(const StrategySpec& spec, Player p) {
    auto it = spec.free_params.find(p);
    if (it == spec.free_params.end()) {
        throw std::invalid_argument("strategy: missing free parameters for player " +
                                    std::string(to_string(p)));
    }
    return it->second;
}

void validate(const StrategySpec& spec) {
    if (spec.players.empty()) throw std::invalid_argument("strategy: no players");
    if (spec.steps < 0) throw std::invalid_argument("strategy: negative step count");
    std::set<Player> seen;
    for (Player p : spec.players) {
        if (!seen.insert(p).second) {
            throw std::invalid_argument("strategy: duplicate player in list");
        }
        free_params_for(spec, p);
    }
    if (spec.cooperation_level_two) {
        const CoinParams& ref = free_params_for(spec, spec.players.front());
        for (Player p : spec.players) {
            const CoinParams& q = free_params_for(spec, p);
            if (q.alpha != ref.alpha || q.beta != ref.beta || q.gamma != ref.gamma) {
                throw std::invalid_argument(
                    "strategy: level-II cooperation requires equal free parameters");
            }
        }
    }
}

}  // namespace

Schedule build_solo(const StrategySpec& spec) {
    validate(spec);
    if (spec.players.size() != 1) {
        throw std::invalid_argument("build_solo: exactly one player required");
    }
    const Player p = spec.players.front();
    const CoinParams constrained = player_coin(p, free_params_for(spec, p));
    const CoinMatrix m = tensor_coin(make_su2_coin(constrained));
    Schedule sched;
    sched.coins.assign(spec.steps, m);
    sched.provenance.assign(spec.steps, describe(p, constrained));
    return sched;
}

Schedule build_alternating(const StrategySpec& spec) {
    validate(spec);
    const int n = static_cast<int>(spec.players.size());
    if (spec.steps % n != 0) {
        throw std::invalid_argument(
            "build_alternating: steps must be divisible by the player count");
    }
    std::vector<CoinMatrix> coins;
    std::vector<std::string> names;
    for (Player p : spec.players) {
        const CoinParams constrained = player_coin(p, free_params_for(spec, p));
        coins.push_back(tensor_coin(make_su2_coin(constrained)));
        names.push_back(describe(p, constrained));
    }
    Schedule sched;
    sched.coins.reserve(spec.steps);
    sched.provenance.reserve(spec.steps);
    for (int t = 0; t < spec.steps; ++t) {
        sched.coins.push_back(coins[t % n]);
        sched.provenance.push_back(names[t % n]);
    }
    return sched;
}

Schedule build_combined(const StrategySpec& spec) {
    validate(spec);
    // First-listed player acts first, so their coin is the rightmost factor.
    CoinMatrix product = CoinMatrix::Identity();
    std::string name;
    for (Player p : spec.players) {
        const CoinParams constrained = player_coin(p, free_params_for(spec, p));
        product = tensor_coin(make_su2_coin(constrained)) * product;
        name = name.empty() ? describe(p, constrained) : describe(p, constrained) + "*" + name;
    }
    Schedule sched;
    sched.coins.assign(spec.steps, product);
    sched.provenance.assign(spec.steps, name);
    return sched;
}

Schedule build_schedule(const StrategySpec& spec) {
    switch (spec.kind) {
        case StrategyKind::Solo: return build_solo(spec);
        case StrategyKind::AlternatingLevelI: return build_alternating(spec);
        case StrategyKind::CombinedPerStep: return build_combined(spec);
    }
    throw std::invalid_argument("build_schedule: unknown strategy kind");
}

GameResult run_game(const StrategySpec& spec, double tol, VerdictMode mode) {
    const Schedule sched = build_schedule(spec);
    WalkState s = evolve(initial_state(), sched.coins);
    GameResult result;
    result.distribution = position_distribution(s);
    result.verdict = decide_winners(marginals(result.distribution), tol, mode);
    return result;
}

}  // namespace qpg
