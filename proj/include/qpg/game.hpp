#pragma once

#include <set>
#include <string>

#include "qpg/coin.hpp"
#include "qpg/walk.hpp"

namespace qpg {

/// sign: winner set from the signs of P_R - P_L and P_U - P_D alone, ties
/// admitting both adjacent quadrants. strict: additionally checks
/// P_R = P_U before blessing a four-way tie as an all-equal verdict.
enum class VerdictMode { SignPattern, StrictFourWay };

std::string_view to_string(VerdictMode m);

struct Verdict {
    std::set<Player> winners;
    Marginals marginals;
    double tie_tolerance = 0.0;
    VerdictMode mode = VerdictMode::SignPattern;
    /// Only meaningful when all four players win: whether the extra
    /// all-equal condition |P_R - P_U| <= tol also held.
    bool strict_all_four_ok = true;
};

/// Quadrant placement is fixed: A in I, B' in II, C' in III, D' in IV,
/// counterclockwise from the positive x-axis. A player wins when the signs
/// of (P_R - P_L, P_U - P_D) are compatible with their quadrant, where a
/// difference within tol counts as a tie compatible with both signs.
Verdict decide_winners(const Marginals& m, double tol, VerdictMode mode);

/// {"winners":[...],"p_left":...,"p_right":...,"p_down":...,"p_up":...,
///  "mode":...,"tol":...} with 17-significant-digit numbers.
std::string verdict_to_json(const Verdict& v);

}  // namespace qpg
