#include "qpg/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpg/format.hpp"

namespace qpg {

namespace {
constexpr double kCoinUnitarityTol = 1e-10;
constexpr double kCompactionCutoff = 1e-300;
}  // namespace

double WalkState::norm_squared() const {
    double n = 0.0;
    for (const auto& [pos, amp] : amplitudes) n += amp.squaredNorm();
    return n;
}

WalkState initial_state() {
    WalkState s;
    AmpVec v;
    v << 0.5, -0.5, -0.5, 0.5;  // (L,R,D,U)
    s.amplitudes.emplace(Position{0, 0}, v);
    s.step = 0;
    return s;
}

WalkState apply_coin(const WalkState& s, const CoinMatrix& m) {
    if (!is_unitary(m, kCoinUnitarityTol)) {
        throw std::invalid_argument("apply_coin: coin matrix is not unitary");
    }
    WalkState out;
    out.step = s.step;
    out.amplitudes.reserve(s.amplitudes.size());
    for (const auto& [pos, amp] : s.amplitudes) {
        out.amplitudes.emplace(pos, m * amp);
    }
    return out;
}

WalkState apply_shift(const WalkState& s) {
    WalkState out;
    out.step = s.step + 1;
    out.amplitudes.reserve(s.amplitudes.size() * 2);
    auto add = [&out](Position p, int slot, const complexd& a) {
        if (std::abs(a.real()) < kCompactionCutoff && std::abs(a.imag()) < kCompactionCutoff) return;
        auto [it, inserted] = out.amplitudes.try_emplace(p, AmpVec::Zero());
        it->second[slot] += a;
    };
    for (const auto& [pos, amp] : s.amplitudes) {
        add({pos.x - 1, pos.y}, kLeft, amp[kLeft]);
        add({pos.x + 1, pos.y}, kRight, amp[kRight]);
        add({pos.x, pos.y - 1}, kDown, amp[kDown]);
        add({pos.x, pos.y + 1}, kUp, amp[kUp]);
    }
    return out;
}

WalkState step(const WalkState& s, const CoinMatrix& m) {
    return apply_shift(apply_coin(s, m));
}

WalkState evolve(WalkState s, std::span<const CoinMatrix> schedule) {
    for (const CoinMatrix& m : schedule) s = step(s, m);
    return s;
}

Distribution position_distribution(const WalkState& s) {
    Distribution d;
    for (const auto& [pos, amp] : s.amplitudes) {
        double p = amp.squaredNorm();
        if (p > 0.0) d[pos] += p;
    }
    return d;
}

Marginals marginals(const Distribution& d) {
    Marginals m;
    for (const auto& [pos, p] : d) {
        if (pos.x < 0) m.p_left += p;
        if (pos.x > 0) m.p_right += p;
        if (pos.y < 0) m.p_down += p;
        if (pos.y > 0) m.p_up += p;
    }
    return m;
}

WalkState dense_step_oracle(const WalkState& s, const CoinMatrix& m, int radius) {
    if (radius < 1) throw std::invalid_argument("dense_step_oracle: radius must be positive");
    const int side = 2 * radius + 1;
    const int dim = 4 * side * side;
    auto box_index = [&](Position p) -> int {
        return (p.x + radius) * side + (p.y + radius);
    };
    for (const auto& [pos, amp] : s.amplitudes) {
        if (std::abs(pos.x) >= radius || std::abs(pos.y) >= radius) {
            throw std::out_of_range("dense_step_oracle: state support touches the box boundary");
        }
    }

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    for (const auto& [pos, amp] : s.amplitudes) {
        for (int c = 0; c < 4; ++c) v[4 * box_index(pos) + c] = amp[c];
    }

    // Full matrix of S * (coin acting at each site). Shift targets that
    // leave the box are dropped; the radius precondition makes that lossless.
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    const Position deltas[4] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (int x = -radius; x <= radius; ++x) {
        for (int y = -radius; y <= radius; ++y) {
            const int src = box_index({x, y});
            for (int cout = 0; cout < 4; ++cout) {
                Position tgt{x + deltas[cout].x, y + deltas[cout].y};
                if (std::abs(tgt.x) > radius || std::abs(tgt.y) > radius) continue;
                const int dst = box_index(tgt);
                for (int cin = 0; cin < 4; ++cin) {
                    op(4 * dst + cout, 4 * src + cin) = m(cout, cin);
                }
            }
        }
    }

    Eigen::VectorXcd w = op * v;
    WalkState out;
    out.step = s.step + 1;
    for (int x = -radius; x <= radius; ++x) {
        for (int y = -radius; y <= radius; ++y) {
            const int base = 4 * box_index({x, y});
            AmpVec amp;
            amp << w[base], w[base + 1], w[base + 2], w[base + 3];
            if (amp.cwiseAbs().maxCoeff() >= kCompactionCutoff) {
                out.amplitudes.emplace(Position{x, y}, amp);
            }
        }
    }
    return out;
}

void write_distribution_csv(std::ostream& os, const Distribution& d) {
    os << "x,y,p\n";
    for (const auto& [pos, p] : d) {
        os << pos.x << ',' << pos.y << ',' << fmt17(p) << '\n';
    }
}

}  // namespace qpg
