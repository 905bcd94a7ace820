#include "qpg/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace qpg {

std::string_view to_string(Player p) {
    switch (p) {
        case Player::A: return "A";
        case Player::Bprime: return "Bprime";
        case Player::Cprime: return "Cprime";
        case Player::Dprime: return "Dprime";
    }
    return "?";
}

std::optional<Player> player_from_string(std::string_view s) {
    if (s == "A") return Player::A;
    if (s == "Bprime" || s == "B'") return Player::Bprime;
    if (s == "Cprime" || s == "C'") return Player::Cprime;
    if (s == "Dprime" || s == "D'") return Player::Dprime;
    return std::nullopt;
}

Coin2 make_su2_coin(const CoinParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma)) {
        throw std::invalid_argument("make_su2_coin: non-finite coin parameter");
    }
    const double cb = std::cos(p.beta);
    const double sb = std::sin(p.beta);
    const complexd ea = std::polar(1.0, p.alpha);
    const complexd eg = std::polar(1.0, p.gamma);
    Coin2 c;
    c << ea * cb, eg * sb,
         std::conj(eg) * sb, -std::conj(ea) * cb;
    return c;
}

CoinMatrix tensor_coin(const Coin2& c) {
    // (L,R,D,U) = (00,01,10,11): entry (i1 i2, j1 j2) = c(i1,j1) * c(i2,j2)
    CoinMatrix m;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2)
                    m(2 * i1 + i2, 2 * j1 + j2) = c(i1, j1) * c(i2, j2);
    return m;
}

CoinParams player_coin(Player player, const CoinParams& free) {
    CoinParams out = free;
    switch (player) {
        case Player::A: out.alpha = 0.0; break;
        case Player::Bprime: out.gamma = 0.0; break;
        case Player::Cprime: out.alpha = -free.gamma; break;
        case Player::Dprime: out.alpha = free.gamma; break;
    }
    return out;
}

CoinMatrix player_coin_matrix(Player player, const CoinParams& free) {
    return tensor_coin(make_su2_coin(player_coin(player, free)));
}

namespace {
template <typename M>
double deviation_impl(const M& m) {
    M d = m * m.adjoint();
    d -= M::Identity();
    return d.cwiseAbs().maxCoeff();
}
}  // namespace

double unitarity_deviation(const Coin2& m) { return deviation_impl(m); }
double unitarity_deviation(const CoinMatrix& m) { return deviation_impl(m); }

bool is_unitary(const Coin2& m, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_unitary: negative tolerance");
    return unitarity_deviation(m) <= tol;
}

bool is_unitary(const CoinMatrix& m, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_unitary: negative tolerance");
    return unitarity_deviation(m) <= tol;
}

}  // namespace qpg
