#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qpg {

using complexd = std::complex<double>;
using Coin2 = Eigen::Matrix2cd;
using CoinMatrix = Eigen::Matrix4cd;

/// Angle triple (alpha, beta, gamma) defining a 2x2 coin. Angles are kept
/// as given; nothing is normalized mod 2*pi.
struct CoinParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// The four players. Each player's identity constrains one combination of
/// the coin angles: A has alpha = 0, B' has gamma = 0, C' has
/// alpha + gamma = 0, D' has alpha - gamma = 0.
enum class Player { A, Bprime, Cprime, Dprime };

std::string_view to_string(Player p);
std::optional<Player> player_from_string(std::string_view s);

/// B_{alpha,beta,gamma} =
///   [ e^{i alpha} cos b    e^{i gamma} sin b  ]
///   [ e^{-i gamma} sin b  -e^{-i alpha} cos b ]
/// Throws std::invalid_argument on non-finite parameters.
Coin2 make_su2_coin(const CoinParams& p);

/// Kronecker product c (x) c in basis order (L,R,D,U) = (00,01,10,11).
CoinMatrix tensor_coin(const Coin2& c);

/// Applies the player's structural constraint to a set of free parameters.
/// The constraint overwrites: A forces alpha<-0, B' forces gamma<-0,
/// C' forces alpha<- -gamma, D' forces alpha<-gamma. beta passes through.
CoinParams player_coin(Player player, const CoinParams& free);

/// 4x4 walk coin for a player with the given free parameters.
CoinMatrix player_coin_matrix(Player player, const CoinParams& free);

/// Max-entry deviation of m * m^dagger from the identity.
double unitarity_deviation(const Coin2& m);
double unitarity_deviation(const CoinMatrix& m);

bool is_unitary(const Coin2& m, double tol);
bool is_unitary(const CoinMatrix& m, double tol);

}  // namespace qpg
