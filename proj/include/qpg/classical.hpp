#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace qpg::classical {

/// Coin biases of the two classical strategies. Strategy A wins with
/// probability p; strategy B wins with probability p0 when the capital is a
/// multiple of 3 and p1 otherwise.
struct ClassicalParams {
    double p = 0.5;
    double p0 = 0.5;
    double p1 = 0.5;
};

/// Round index -> which strategy to play. 'A' or 'B'.
using PlaySequence = std::function<char(long round)>;

PlaySequence all_a();
PlaySequence all_b();
/// Cycles through a pattern string such as "AABB".
PlaySequence pattern_sequence(std::string pattern);

struct SimResult {
    double mean_final_capital = 0.0;
    double std_error = 0.0;
    long rounds = 0;
    long trials = 0;
};

/// Monte Carlo from capital 0, +-1 per round. Each trial draws from its own
/// deterministic substream of `seed`, so results are bit-reproducible and
/// independent of trial execution order.
SimResult simulate_capital(const ClassicalParams& params, const PlaySequence& seq, long rounds,
                           long trials, std::uint64_t seed);

/// Expected capital gain per round under all-B play at stationarity of the
/// capital-mod-3 chain. Throws std::domain_error when the chain has no
/// unique stationary distribution.
double exact_drift_B(const ClassicalParams& params);

/// Exact expected final capital after `rounds` of all-B play from capital 0
/// (finite-horizon chain analysis, including the transient).
double exact_mean_capital_B(const ClassicalParams& params, long rounds);

struct ParadoxReport {
    double drift_a = 0.0;
    double drift_b = 0.0;
    double drift_mixed = 0.0;
    double stderr_a = 0.0;
    double stderr_b = 0.0;
    double stderr_mixed = 0.0;
    double exact_drift_b = 0.0;
    bool paradox = false;
};

/// Runs all-A, all-B and the mixed pattern; the paradox flag is set when
/// both pure games lose and the mixture wins, each by 3 standard errors.
ParadoxReport paradox_demo(const ClassicalParams& params, const std::string& pattern,
                           long rounds, long trials, std::uint64_t seed);

std::string paradox_report_to_json(const ParadoxReport& r);

/// Literature preset (Harmer/Parrondo): p = 0.495, p0 = 0.095, p1 = 0.745,
/// pattern AABB.
ClassicalParams canonical_preset();

}  // namespace qpg::classical
