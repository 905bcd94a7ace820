#include "qpg/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "qpg/walk.hpp"

namespace qpg {

StepOneProbs step1_probabilities(const CoinParams& p) {
    const double s2b = std::sin(2.0 * p.beta);
    const double cd = std::cos(p.alpha - p.gamma);
    const double c2d = std::cos(2.0 * (p.alpha - p.gamma));
    const double common = 0.5 * s2b * s2b * c2d;
    StepOneProbs out;
    out.p_left = 0.25 * (1.0 + common - 2.0 * s2b * cd + 0.5 * s2b * s2b);
    out.p_right = 0.25 * (1.0 - 0.5 * s2b * s2b - common);
    out.p_down = out.p_right;
    out.p_up = 0.25 * (1.0 + common + 2.0 * s2b * cd + 0.5 * s2b * s2b);
    return out;
}

std::array<complexd, 4> step1_amplitudes(const CoinParams& p) {
    const double cb = std::cos(p.beta);
    const double sb = std::sin(p.beta);
    const complexd epa = std::polar(1.0, p.alpha + p.gamma);   // e^{i(a+g)}
    const complexd ema = std::polar(1.0, p.alpha - p.gamma);   // e^{i(a-g)}
    const complexd e2a = std::polar(1.0, 2.0 * p.alpha);
    const complexd e2g = std::polar(1.0, 2.0 * p.gamma);
    std::array<complexd, 4> amps;
    amps[0] = 0.5 * (e2a * cb * cb - 2.0 * epa * cb * sb + e2g * sb * sb);
    amps[1] = 0.5 * (ema * cb * sb + cb * cb - sb * sb - std::conj(ema) * sb * cb);
    amps[2] = amps[1];
    amps[3] = 0.5 * (std::conj(e2g) * sb * sb + 2.0 * std::conj(epa) * cb * sb +
                     std::conj(e2a) * cb * cb);
    return amps;
}

double check_engine_against_oracle(std::span<const CoinParams> grid) {
    if (grid.empty()) throw std::invalid_argument("check_engine_against_oracle: empty grid");
    double worst = 0.0;
    for (const CoinParams& p : grid) {
        const CoinMatrix coin = tensor_coin(make_su2_coin(p));
        const Distribution d = position_distribution(step(initial_state(), coin));
        auto at = [&d](int x, int y) {
            auto it = d.find(Position{x, y});
            return it == d.end() ? 0.0 : it->second;
        };
        const StepOneProbs probs = step1_probabilities(p);
        worst = std::max(worst, std::abs(at(-1, 0) - probs.p_left));
        worst = std::max(worst, std::abs(at(1, 0) - probs.p_right));
        worst = std::max(worst, std::abs(at(0, -1) - probs.p_down));
        worst = std::max(worst, std::abs(at(0, 1) - probs.p_up));
    }
    return worst;
}

std::vector<CoinParams> param_grid(int per_axis, double lo, double hi) {
    if (per_axis < 1) throw std::invalid_argument("param_grid: need at least one point per axis");
    std::vector<double> axis(per_axis);
    for (int i = 0; i < per_axis; ++i) {
        axis[i] = per_axis == 1 ? lo : lo + (hi - lo) * i / (per_axis - 1);
    }
    std::vector<CoinParams> grid;
    grid.reserve(static_cast<std::size_t>(per_axis) * per_axis * per_axis);
    for (double a : axis)
        for (double b : axis)
            for (double g : axis) grid.push_back({a, b, g});
    return grid;
}

}  // namespace qpg
