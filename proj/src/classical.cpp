#include "qpg/classical.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "qpg/format.hpp"

namespace qpg::classical {

namespace {

void validate(const ClassicalParams& p) {
    auto ok = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!ok(p.p) || !ok(p.p0) || !ok(p.p1)) {
        throw std::invalid_argument("classical: probabilities must lie in [0, 1]");
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int residue3(long capital) { return static_cast<int>(((capital % 3) + 3) % 3); }

double win_prob(const ClassicalParams& p, char strat, long capital) {
    if (strat == 'A') return p.p;
    return residue3(capital) == 0 ? p.p0 : p.p1;
}

// Row-stochastic transition matrix of the capital-mod-3 chain under all-B.
Eigen::Matrix3d chain_B(const ClassicalParams& p) {
    Eigen::Matrix3d P = Eigen::Matrix3d::Zero();
    for (int s = 0; s < 3; ++s) {
        const double w = s == 0 ? p.p0 : p.p1;
        P(s, (s + 1) % 3) += w;
        P(s, (s + 2) % 3) += 1.0 - w;
    }
    return P;
}

}  // namespace

PlaySequence all_a() {
    return [](long) { return 'A'; };
}

PlaySequence all_b() {
    return [](long) { return 'B'; };
}

PlaySequence pattern_sequence(std::string pattern) {
    if (pattern.empty()) throw std::invalid_argument("pattern_sequence: empty pattern");
    for (char c : pattern) {
        if (c != 'A' && c != 'B') {
            throw std::invalid_argument("pattern_sequence: pattern must use only 'A' and 'B'");
        }
    }
    return [pattern = std::move(pattern)](long round) {
        return pattern[static_cast<std::size_t>(round) % pattern.size()];
    };
}

SimResult simulate_capital(const ClassicalParams& params, const PlaySequence& seq, long rounds,
                           long trials, std::uint64_t seed) {
    validate(params);
    if (rounds < 1 || trials < 1) {
        throw std::invalid_argument("simulate_capital: rounds and trials must be >= 1");
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1))));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        long capital = 0;
        for (long round = 0; round < rounds; ++round) {
            const double w = win_prob(params, seq(round), capital);
            capital += unit(rng) < w ? 1 : -1;
        }
        sum += capital;
        sum_sq += static_cast<double>(capital) * capital;
    }
    SimResult r;
    r.rounds = rounds;
    r.trials = trials;
    r.mean_final_capital = sum / trials;
    const double var =
        trials > 1 ? (sum_sq - sum * sum / trials) / (trials - 1) : 0.0;
    r.std_error = std::sqrt(std::max(var, 0.0) / trials);
    return r;
}

double exact_drift_B(const ClassicalParams& params) {
    validate(params);
    const Eigen::Matrix3d P = chain_B(params);
    // Solve pi (P - I) = 0 with sum(pi) = 1 as an overdetermined system.
    Eigen::Matrix<double, 4, 3> A;
    A.topRows<3>() = (P - Eigen::Matrix3d::Identity()).transpose();
    A.row(3).setOnes();
    Eigen::Vector4d b = Eigen::Vector4d::Zero();
    b[3] = 1.0;
    Eigen::Vector3d pi = A.colPivHouseholderQr().solve(b);
    if ((A * pi - b).norm() > 1e-9 || pi.minCoeff() < -1e-12) {
        throw std::domain_error("exact_drift_B: chain has no unique stationary distribution");
    }
    double drift = 0.0;
    for (int s = 0; s < 3; ++s) {
        const double w = s == 0 ? params.p0 : params.p1;
        drift += pi[s] * (2.0 * w - 1.0);
    }
    return drift;
}

double exact_mean_capital_B(const ClassicalParams& params, long rounds) {
    validate(params);
    if (rounds < 0) throw std::invalid_argument("exact_mean_capital_B: negative rounds");
    const Eigen::Matrix3d P = chain_B(params);
    Eigen::RowVector3d mu = Eigen::RowVector3d::Zero();
    mu[0] = 1.0;  // capital starts at 0, residue 0
    double mean = 0.0;
    for (long t = 0; t < rounds; ++t) {
        for (int s = 0; s < 3; ++s) {
            const double w = s == 0 ? params.p0 : params.p1;
            mean += mu[s] * (2.0 * w - 1.0);
        }
        mu = mu * P;
    }
    return mean;
}

ParadoxReport paradox_demo(const ClassicalParams& params, const std::string& pattern,
                           long rounds, long trials, std::uint64_t seed) {
    const SimResult a = simulate_capital(params, all_a(), rounds, trials, seed);
    const SimResult b = simulate_capital(params, all_b(), rounds, trials, splitmix64(seed + 1));
    const SimResult mixed =
        simulate_capital(params, pattern_sequence(pattern), rounds, trials, splitmix64(seed + 2));
    ParadoxReport r;
    r.drift_a = a.mean_final_capital / rounds;
    r.drift_b = b.mean_final_capital / rounds;
    r.drift_mixed = mixed.mean_final_capital / rounds;
    r.stderr_a = a.std_error / rounds;
    r.stderr_b = b.std_error / rounds;
    r.stderr_mixed = mixed.std_error / rounds;
    r.exact_drift_b = exact_drift_B(params);
    r.paradox = r.drift_a < -3.0 * r.stderr_a && r.drift_b < -3.0 * r.stderr_b &&
                r.drift_mixed > 3.0 * r.stderr_mixed;
    return r;
}

std::string paradox_report_to_json(const ParadoxReport& r) {
    std::ostringstream os;
    os << "{\"drift_A\":" << fmt17(r.drift_a) << ",\"drift_B\":" << fmt17(r.drift_b)
       << ",\"drift_mixed\":" << fmt17(r.drift_mixed)
       << ",\"stderrs\":{\"A\":" << fmt17(r.stderr_a) << ",\"B\":" << fmt17(r.stderr_b)
       << ",\"mixed\":" << fmt17(r.stderr_mixed) << "}"
       << ",\"exact_drift_B\":" << fmt17(r.exact_drift_b)
       << ",\"paradox\":" << (r.paradox ? "true" : "false") << "}";
    return os.str();
}

ClassicalParams canonical_preset() { return {0.495, 0.095, 0.745}; }

}  // namespace qpg::classical
