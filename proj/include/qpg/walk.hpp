#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <unordered_map>

#include "qpg/coin.hpp"

namespace qpg {

struct Position {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Position&, const Position&) = default;
};

struct PositionHash {
    std::size_t operator()(const Position& p) const noexcept {
        std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
                          static_cast<std::uint32_t>(p.y);
        // splitmix64 finalizer
        k += 0x9e3779b97f4a7c15ULL;
        k = (k ^ (k >> 30)) * 0xbf58476d1ce4e5b9ULL;
        k = (k ^ (k >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(k ^ (k >> 31));
    }
};

/// Coin basis index order; matches the (00,01,10,11) tensor convention.
enum CoinBasis : int { kLeft = 0, kRight = 1, kDown = 2, kUp = 3 };

using AmpVec = Eigen::Vector4cd;

/// Sparse pure state of the walker: position -> 4 coin amplitudes.
struct WalkState {
    std::unordered_map<Position, AmpVec, PositionHash> amplitudes;
    int step = 0;

    double norm_squared() const;
};

using Distribution = std::map<Position, double>;

struct Marginals {
    double p_left = 0.0;
    double p_right = 0.0;
    double p_down = 0.0;
    double p_up = 0.0;
};

/// Walker at the origin in the coin state (1/2)(|L> - |R> - |D> + |U>).
WalkState initial_state();

/// Applies the 4x4 coin at every occupied position. Throws
/// std::invalid_argument if m is not unitary to 1e-10.
WalkState apply_coin(const WalkState& s, const CoinMatrix& m);

/// Coin-conditioned translation: L -> (x-1,y), R -> (x+1,y), D -> (x,y-1),
/// U -> (x,y+1). Increments the step counter. Entries whose amplitude
/// magnitudes all fall below 1e-300 are dropped.
WalkState apply_shift(const WalkState& s);

/// One walk step: shift after coin.
WalkState step(const WalkState& s, const CoinMatrix& m);

/// Folds step over the schedule in order. An empty schedule is a no-op.
WalkState evolve(WalkState s, std::span<const CoinMatrix> schedule);

/// P(x,y) = sum_c |amplitude(x,y,c)|^2.
Distribution position_distribution(const WalkState& s);

/// Open half-plane sums: p_left over x<0, p_right over x>0, p_down over
/// y<0, p_up over y>0. The x=0 column and y=0 row carry the remainder.
Marginals marginals(const Distribution& d);

/// Independent check on step(): materializes the full step operator over
/// the box [-radius, radius]^2 as a dense 4(2r+1)^2-dimensional matrix and
/// applies it by matrix-vector multiplication. Throws std::out_of_range if
/// the support of s is not strictly inside the box.
WalkState dense_step_oracle(const WalkState& s, const CoinMatrix& m, int radius);

/// CSV with header "x,y,p", rows sorted by (x, then y), 17 significant
/// digits.
void write_distribution_csv(std::ostream& os, const Distribution& d);

}  // namespace qpg
