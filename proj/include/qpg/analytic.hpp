#pragma once

#include <array>
#include <span>
#include <vector>

#include "qpg/coin.hpp"

namespace qpg {

/// One-step probabilities at the four on-axis positions
/// (-1,0), (1,0), (0,-1), (0,1).
struct StepOneProbs {
    double p_left = 0.0;
    double p_right = 0.0;
    double p_down = 0.0;
    double p_up = 0.0;
};

/// Closed-form one-step probabilities from the walk's fixed initial state:
///   p_left  = (1/4){1 + (1/2)sin^2(2b)cos(2a-2g) - 2 sin(2b)cos(a-g) + (1/2)sin^2(2b)}
///   p_right = p_down = (1/4){1 - (1/2)sin^2(2b) - (1/2)sin^2(2b)cos(2a-2g)}
///   p_up    = (1/4){1 + (1/2)sin^2(2b)cos(2a-2g) + 2 sin(2b)cos(a-g) + (1/2)sin^2(2b)}
StepOneProbs step1_probabilities(const CoinParams& p);

/// One-step amplitudes at (-1,0), (1,0), (0,-1), (0,1) from the tensor
/// expansion of the coin acting on the initial coin state. The up
/// coefficient's first term is e^{-2ig} sin^2(b).
std::array<complexd, 4> step1_amplitudes(const CoinParams& p);

/// Runs one engine step from the initial state for each parameter triple
/// and returns the maximum absolute deviation of the four on-axis
/// probabilities from the closed forms.
double check_engine_against_oracle(std::span<const CoinParams> grid);

/// Uniform grid of n points per axis over [lo, hi]^3.
std::vector<CoinParams> param_grid(int per_axis, double lo, double hi);

}  // namespace qpg
