#include "qpg/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qpg/format.hpp"

namespace qpg {

std::string_view to_string(VerdictMode m) {
    return m == VerdictMode::SignPattern ? "sign" : "strict";
}

Verdict decide_winners(const Marginals& m, double tol, VerdictMode mode) {
    if (tol < 0.0 || !std::isfinite(tol)) {
        throw std::invalid_argument("decide_winners: negative or non-finite tolerance");
    }
    auto axis_sign = [tol](double diff) -> int {
        if (std::abs(diff) <= tol) return 0;
        return diff > 0.0 ? 1 : -1;
    };
    const int sx = axis_sign(m.p_right - m.p_left);
    const int sy = axis_sign(m.p_up - m.p_down);

    Verdict v;
    v.marginals = m;
    v.tie_tolerance = tol;
    v.mode = mode;
    // Quadrant sign patterns: A (+,+), B' (-,+), C' (-,-), D' (+,-).
    if (sx >= 0 && sy >= 0) v.winners.insert(Player::A);
    if (sx <= 0 && sy >= 0) v.winners.insert(Player::Bprime);
    if (sx <= 0 && sy <= 0) v.winners.insert(Player::Cprime);
    if (sx >= 0 && sy <= 0) v.winners.insert(Player::Dprime);

    if (sx == 0 && sy == 0) {
        v.strict_all_four_ok = std::abs(m.p_right - m.p_up) <= tol;
    }
    return v;
}

std::string verdict_to_json(const Verdict& v) {
    std::ostringstream os;
    os << "{\"winners\":[";
    bool first = true;
    for (Player p : v.winners) {
        if (!first) os << ',';
        first = false;
        os << '"' << to_string(p) << '"';
    }
    os << "],\"p_left\":" << fmt17(v.marginals.p_left)
       << ",\"p_right\":" << fmt17(v.marginals.p_right)
       << ",\"p_down\":" << fmt17(v.marginals.p_down)
       << ",\"p_up\":" << fmt17(v.marginals.p_up)
       << ",\"mode\":\"" << to_string(v.mode) << '"'
       << ",\"tol\":" << fmt17(v.tie_tolerance);
    if (v.mode == VerdictMode::StrictFourWay && v.winners.size() == 4) {
        os << ",\"strict_all_four_ok\":" << (v.strict_all_four_ok ? "true" : "false");
    }
    os << '}';
    return os.str();
}

}  // namespace qpg
