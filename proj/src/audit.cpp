#include "qpg/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qpg/format.hpp"

namespace qpg {

namespace {

constexpr double kPi = std::numbers::pi;

using ParamList = std::vector<std::pair<std::string, double>>;

double get(const ParamList& params, const std::string& key) {
    for (const auto& [k, v] : params) {
        if (k == key) return v;
    }
    throw std::invalid_argument("audit record is missing parameter '" + key + "'");
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    if (n > 1) v[n - 1] = hi;  // exact endpoint; claim predicates compare against it
    return v;
}

// n interior points of (lo, hi), endpoints excluded.
std::vector<double> open_grid(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * (i + 1) / (n + 1);
    return v;
}

std::vector<int> steps_for(const GridConfig& cfg, std::vector<int> defaults, bool even_only) {
    std::vector<int> t = cfg.steps.empty() ? std::move(defaults) : cfg.steps;
    if (even_only) {
        std::erase_if(t, [](int v) { return v % 2 != 0; });
        if (t.empty()) t = {2, 10, 20, 50};
    }
    return t;
}

StrategySpec solo_spec(Player pl, const CoinParams& free, int steps) {
    StrategySpec spec;
    spec.kind = StrategyKind::Solo;
    spec.players = {pl};
    spec.free_params[pl] = free;
    spec.steps = steps;
    return spec;
}

std::vector<Player> rotated_order(const std::vector<Player>& base, int start) {
    std::vector<Player> out;
    const int n = static_cast<int>(base.size());
    for (int i = 0; i < n; ++i) out.push_back(base[(start + i) % n]);
    return out;
}

// Rebuilds the strategy encoded by a record's claim id and parameters.
StrategySpec spec_for(const std::string& claim, const ParamList& params, int t) {
    if (claim == "C1" || claim == "C3") {
        return solo_spec(Player::A, {0.0, get(params, "beta"), get(params, "gamma")}, t);
    }
    if (claim == "C2" || claim == "C6") {
        return solo_spec(Player::Dprime, {0.0, get(params, "beta"), get(params, "gamma")}, t);
    }
    if (claim == "C4") {
        return solo_spec(Player::Bprime, {get(params, "alpha"), get(params, "beta"), 0.0}, t);
    }
    if (claim == "C5") {
        return solo_spec(Player::Cprime, {0.0, get(params, "beta"), get(params, "gamma")}, t);
    }
    if (claim == "C7") {
        StrategySpec spec;
        spec.kind = StrategyKind::AlternatingLevelI;
        spec.players = {Player::A, Player::Bprime};
        const CoinParams shared{get(params, "theta"), get(params, "beta"), get(params, "theta")};
        spec.free_params[Player::A] = shared;
        spec.free_params[Player::Bprime] = shared;
        spec.cooperation_level_two = true;
        spec.steps = t;
        return spec;
    }
    if (claim == "C8") {
        StrategySpec spec;
        spec.kind = StrategyKind::AlternatingLevelI;
        spec.players = {Player::A, Player::Bprime};
        const double beta = get(params, "beta");
        spec.free_params[Player::A] = {0.0, beta, get(params, "gamma_A")};
        spec.free_params[Player::Bprime] = {get(params, "alpha_B"), beta, 0.0};
        spec.steps = t;
        return spec;
    }
    if (claim == "C9") {
        StrategySpec spec;
        spec.kind = StrategyKind::CombinedPerStep;
        spec.players = rotated_order({Player::A, Player::Bprime},
                                     static_cast<int>(get(params, "start")));
        const double beta = get(params, "beta");
        spec.free_params[Player::A] = {0.0, beta, get(params, "gamma_A")};
        spec.free_params[Player::Bprime] = {get(params, "alpha_B"), beta, 0.0};
        spec.steps = t;
        return spec;
    }
    if (claim == "C10") {
        StrategySpec spec;
        spec.kind = StrategyKind::CombinedPerStep;
        spec.players = rotated_order({Player::A, Player::Bprime, Player::Cprime},
                                     static_cast<int>(get(params, "start")));
        const double beta = get(params, "beta");
        spec.free_params[Player::A] = {0.0, beta, get(params, "gamma_A")};
        spec.free_params[Player::Bprime] = {get(params, "alpha_B"), beta, 0.0};
        spec.free_params[Player::Cprime] = {0.0, beta, get(params, "gamma_C")};
        spec.steps = t;
        return spec;
    }
    throw std::invalid_argument("unknown claim id '" + claim + "'");
}

Verdict run_spec(const StrategySpec& spec, double tol) {
    return run_game(spec, tol, VerdictMode::SignPattern).verdict;
}

bool winners_are(const Verdict& v, std::initializer_list<Player> exact) {
    return v.winners == std::set<Player>(exact);
}

bool winners_include(const Verdict& v, std::initializer_list<Player> subset) {
    for (Player p : subset) {
        if (!v.winners.contains(p)) return false;
    }
    return true;
}

AuditRecord make_record(std::string claim, ParamList params, int t, bool holds,
                        const Marginals& marg) {
    AuditRecord r;
    r.claim = std::move(claim);
    r.params = std::move(params);
    r.t = t;
    r.holds = holds;
    r.marg = marg;
    return r;
}

// Solo claims C1..C6 share the loop shape: a coin-parameter grid, a
// marginals predicate, and a multi-t sweep.
template <typename MakeParams, typename Predicate>
std::vector<AuditRecord> run_solo_claim(const std::string& id, const GridConfig& cfg, double tol,
                                        const std::vector<std::vector<double>>& axes,
                                        std::vector<int> t_list, MakeParams make_params,
                                        Predicate pred) {
    std::vector<AuditRecord> out;
    std::vector<double> point(axes.size());
    const std::size_t total = [&] {
        std::size_t n = 1;
        for (const auto& a : axes) n *= a.size();
        return n;
    }();
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t ax = axes.size(); ax-- > 0;) {
            point[ax] = axes[ax][rem % axes[ax].size()];
            rem /= axes[ax].size();
        }
        const ParamList params = make_params(point);
        for (int t : t_list) {
            const StrategySpec spec = spec_for(id, params, t);
            const Verdict v = run_spec(spec, tol);
            out.push_back(make_record(id, params, t, pred(v.marginals, tol), v.marginals));
        }
    }
    return out;
}

}  // namespace

std::vector<Claim> registry() {
    std::vector<Claim> claims;

    claims.push_back(Claim{
        "C1",
        "Unbiased coin (alpha=gamma=0) gives a left/right-symmetric distribution; "
        "the up/down marginals are recorded alongside for inspection. Note: with "
        "this initial state the one-step identity p_left - p_right = (sc/2)(sc - 1), "
        "sc = sin(2 beta), is nonzero on (0, pi/2), so the audit records where "
        "the engine actually finds symmetry instead of assuming it.",
        "alpha=0, gamma=0, beta in (0, pi/2)",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            return run_solo_claim(
                "C1", cfg, tol, {open_grid(0.0, kPi / 2.0, n)},
                steps_for(cfg, {2, 10, 20, 50}, false),
                [](const std::vector<double>& p) {
                    return ParamList{{"alpha", 0.0}, {"beta", p[0]}, {"gamma", 0.0}};
                },
                [](const Marginals& m, double tol) {
                    return std::abs(m.p_left - m.p_right) <= tol;
                });
        }});

    claims.push_back(Claim{
        "C2",
        "Left-upward symmetry at alpha=gamma. At t=1 the closed forms give "
        "p_up - p_left = sin(2 beta) cos(alpha - gamma), which is nonzero at "
        "alpha=gamma unless beta is degenerate, so the t=1 slice is expected to fail; "
        "equality instead requires cos(alpha - gamma) = 0.",
        "alpha=gamma in [-2pi, 2pi], beta in (0, pi/2)",
        {1, 2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            return run_solo_claim(
                "C2", cfg, tol,
                {linspace(-2.0 * kPi, 2.0 * kPi, n), open_grid(0.0, kPi / 2.0, nb)},
                steps_for(cfg, {1, 2, 10, 20, 50}, false),
                [](const std::vector<double>& p) {
                    return ParamList{{"alpha", p[0]}, {"beta", p[1]}, {"gamma", p[0]}};
                },
                [](const Marginals& m, double tol) {
                    return std::abs(m.p_left - m.p_up) <= tol;
                });
        }});

    claims.push_back(Claim{
        "C3",
        "Player A's coin (alpha=0) biases the walk with P_L > P_R and P_D > P_U "
        "for gamma in [-2pi, -pi].",
        "alpha=0, gamma in [-2pi, -pi], beta in (0, pi/2)",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            return run_solo_claim(
                "C3", cfg, tol,
                {linspace(-2.0 * kPi, -kPi, n), open_grid(0.0, kPi / 2.0, nb)},
                steps_for(cfg, {2, 10, 20, 50}, false),
                [](const std::vector<double>& p) {
                    return ParamList{{"alpha", 0.0}, {"beta", p[1]}, {"gamma", p[0]}};
                },
                [](const Marginals& m, double tol) {
                    return m.p_left - m.p_right > tol && m.p_down - m.p_up > tol;
                });
        }});

    claims.push_back(Claim{
        "C4",
        "Player B''s coin (gamma=0) biases the walk with P_L < P_R and P_D > P_U "
        "for alpha in [pi, 2pi].",
        "gamma=0, alpha in [pi, 2pi], beta in (0, pi/2)",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            return run_solo_claim(
                "C4", cfg, tol, {linspace(kPi, 2.0 * kPi, n), open_grid(0.0, kPi / 2.0, nb)},
                steps_for(cfg, {2, 10, 20, 50}, false),
                [](const std::vector<double>& p) {
                    return ParamList{{"alpha", p[0]}, {"beta", p[1]}, {"gamma", 0.0}};
                },
                [](const Marginals& m, double tol) {
                    return m.p_right - m.p_left > tol && m.p_down - m.p_up > tol;
                });
        }});

    claims.push_back(Claim{
        "C5",
        "Player C''s coin (alpha=-gamma) biases the walk with P_U > P_D and "
        "P_R > P_L for gamma in [-pi, -pi/2].",
        "alpha=-gamma, gamma in [-pi, -pi/2], beta in (0, pi/2)",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            return run_solo_claim(
                "C5", cfg, tol, {linspace(-kPi, -kPi / 2.0, n), open_grid(0.0, kPi / 2.0, nb)},
                steps_for(cfg, {2, 10, 20, 50}, false),
                [](const std::vector<double>& p) {
                    return ParamList{{"alpha", -p[0]}, {"beta", p[1]}, {"gamma", p[0]}};
                },
                [](const Marginals& m, double tol) {
                    return m.p_up - m.p_down > tol && m.p_right - m.p_left > tol;
                });
        }});

    claims.push_back(Claim{
        "C6",
        "Player D''s coin (alpha=gamma) does not bias the walk: both axis "
        "marginals tie. At t=1 the closed forms give p_up - p_left = "
        "sin(2 beta) cos(alpha - gamma) = sin(2 beta) at alpha=gamma, and "
        "p_left != p_up in general, so the t=1 slice is expected to fail off the "
        "degenerate betas.",
        "alpha=gamma in [-2pi, 2pi], beta in (0, pi/2)",
        {1, 2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            return run_solo_claim(
                "C6", cfg, tol,
                {linspace(-2.0 * kPi, 2.0 * kPi, n), open_grid(0.0, kPi / 2.0, nb)},
                steps_for(cfg, {1, 2, 10, 20, 50}, false),
                [](const std::vector<double>& p) {
                    return ParamList{{"alpha", p[0]}, {"beta", p[1]}, {"gamma", p[0]}};
                },
                [](const Marginals& m, double tol) {
                    return std::abs(m.p_left - m.p_right) <= tol &&
                           std::abs(m.p_up - m.p_down) <= tol;
                });
        }});

    claims.push_back(Claim{
        "C7",
        "Level-II equal-parameter alternation of A and B' at even t: both "
        "orderings yield the same verdict and A and B' are joint winners.",
        "shared alpha=gamma=theta in [-2pi, 2pi], beta in (0, pi/2), even t",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            std::vector<AuditRecord> out;
            for (double theta : linspace(-2.0 * kPi, 2.0 * kPi, nb)) {
                for (double beta : open_grid(0.0, kPi / 2.0, nb)) {
                    const ParamList params{{"theta", theta}, {"beta", beta}};
                    for (int t : steps_for(cfg, {2, 10, 20, 50}, true)) {
                        StrategySpec ab = spec_for("C7", params, t);
                        StrategySpec ba = ab;
                        ba.players = {Player::Bprime, Player::A};
                        const Verdict vab = run_spec(ab, tol);
                        const Verdict vba = run_spec(ba, tol);
                        const bool holds = vab.winners == vba.winners &&
                                           winners_include(vab, {Player::A, Player::Bprime});
                        out.push_back(make_record("C7", params, t, holds, vab.marginals));
                    }
                }
            }
            return out;
        }});

    claims.push_back(Claim{
        "C8",
        "Epsilon strategies in A/B' alternation: A plays gamma=eps; A wins solo "
        "when B' plays alpha > eps, and they tie when alpha = eps.",
        "gamma_A=eps, alpha_B in {eps} and eps + (0, pi), beta in (0, pi/2), even t",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            const int k = std::max(3, n / 3);
            const double eps = cfg.epsilon_min;
            std::vector<std::pair<double, bool>> alphas;  // (alpha_B, at_eps)
            alphas.emplace_back(eps, true);
            for (double d : open_grid(0.0, kPi, nb)) alphas.emplace_back(eps + d, false);
            std::vector<AuditRecord> out;
            for (const auto& [alpha_b, at_eps] : alphas) {
                for (double beta : open_grid(0.0, kPi / 2.0, k)) {
                    const ParamList params{{"gamma_A", eps},
                                           {"alpha_B", alpha_b},
                                           {"beta", beta},
                                           {"at_eps", at_eps ? 1.0 : 0.0}};
                    for (int t : steps_for(cfg, {2, 10, 20, 50}, true)) {
                        const Verdict v = run_spec(spec_for("C8", params, t), tol);
                        const bool holds =
                            at_eps ? winners_include(v, {Player::A, Player::Bprime})
                                   : winners_are(v, {Player::A});
                        out.push_back(make_record("C8", params, t, holds, v.marginals));
                    }
                }
            }
            return out;
        }});

    claims.push_back(Claim{
        "C9",
        "Two-player combined coin, A and B': with gamma_A in (-2pi, -pi], A wins "
        "solo when alpha_B < gamma_A and B' wins solo when alpha_B > gamma_A; "
        "gamma_A = -pi (A starting) or alpha_B = -pi (B' starting) gives a joint win.",
        "gamma_A in (-2pi, -pi], alpha_B near gamma_A, beta in (0, pi/2)",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int nb = std::max(3, n / 2);
            const int k = std::max(3, n / 3);
            const std::vector<double> offsets{-1.0, -0.5, -0.2, 0.2, 0.5, 1.0};
            const std::vector<int> t_list = steps_for(cfg, {2, 10, 20, 50}, false);
            std::vector<AuditRecord> out;
            auto eval = [&](const ParamList& params, int clause) {
                for (int t : t_list) {
                    const Verdict v = run_spec(spec_for("C9", params, t), tol);
                    bool holds = false;
                    switch (clause) {
                        case 0:
                            holds = get(params, "alpha_B") < get(params, "gamma_A")
                                        ? winners_are(v, {Player::A})
                                        : winners_are(v, {Player::Bprime});
                            break;
                        case 1:
                        case 2:
                            holds = winners_include(v, {Player::A, Player::Bprime});
                            break;
                    }
                    out.push_back(make_record("C9", params, t, holds, v.marginals));
                }
            };
            // A starts; gamma_A sweeps (-2pi, -pi] with -pi as the last point.
            for (double gamma_a : linspace(-2.0 * kPi + 0.2, -kPi, std::max(4, nb))) {
                const bool at_pi = gamma_a == -kPi;
                for (double d : offsets) {
                    for (double beta : open_grid(0.0, kPi / 2.0, k)) {
                        eval({{"start", 0.0},
                              {"gamma_A", gamma_a},
                              {"alpha_B", gamma_a + d},
                              {"beta", beta},
                              {"clause", at_pi ? 1.0 : 0.0}},
                             at_pi ? 1 : 0);
                    }
                }
            }
            // B' starts with alpha_B = -pi.
            for (double gamma_a : open_grid(-2.0 * kPi, -kPi, nb)) {
                for (double beta : open_grid(0.0, kPi / 2.0, k)) {
                    eval({{"start", 1.0},
                          {"gamma_A", gamma_a},
                          {"alpha_B", -kPi},
                          {"beta", beta},
                          {"clause", 2.0}},
                         2);
                }
            }
            return out;
        }});

    claims.push_back(Claim{
        "C10",
        "Three-player combined coin, A, B' and C': the six solo/joint winning "
        "clauses over the stated gamma_A, alpha_B and gamma_C ranges.",
        "gamma_A in (-2pi, -pi), alpha_B in (pi, 2pi), gamma_C in (-pi, -pi/2), "
        "beta in (0, pi/2)",
        {2, 10, 20, 50},
        [](const GridConfig& cfg, double tol) {
            const int n = std::max(2, cfg.points_per_axis);
            const int k = std::max(3, n / 3);
            const std::vector<double> pos_offsets{0.3, 0.8, 1.5};
            const std::vector<double> neq_offsets{-1.0, -0.4, 0.4, 1.0};
            const std::vector<double> betas = open_grid(0.0, kPi / 2.0, 3);
            const std::vector<double> gamma_cs = open_grid(-kPi, -kPi / 2.0, k);
            const std::vector<int> t_list = steps_for(cfg, {2, 10, 20, 50}, false);
            std::vector<AuditRecord> out;
            auto eval = [&](double start, double gamma_a, double alpha_b, double gamma_c,
                            double beta, int clause) {
                const ParamList params{{"start", start},         {"gamma_A", gamma_a},
                                       {"alpha_B", alpha_b},     {"gamma_C", gamma_c},
                                       {"beta", beta},           {"clause", double(clause)}};
                for (int t : t_list) {
                    const Verdict v = run_spec(spec_for("C10", params, t), tol);
                    bool holds = false;
                    switch (clause) {
                        case 1: holds = winners_include(v, {Player::A}); break;
                        case 2: holds = winners_are(v, {Player::Bprime}); break;
                        case 3: holds = winners_are(v, {Player::Cprime}); break;
                        default:
                            holds = winners_include(
                                v, {Player::A, Player::Bprime, Player::Cprime});
                            break;
                    }
                    out.push_back(make_record("C10", params, t, holds, v.marginals));
                }
            };
            for (double beta : betas) {
                for (double gc : gamma_cs) {
                    // 1: A leads with gamma_A in (-2pi, -pi), B' plays alpha > gamma_A.
                    for (double ga : linspace(-2.0 * kPi + 0.2, -kPi - 0.2, k))
                        for (double d : pos_offsets) eval(0.0, ga, ga + d, gc, beta, 1);
                    // 2: B' leads with alpha_B in (pi, 2pi], A plays gamma > alpha_B.
                    for (double ab : linspace(kPi + 0.2, 2.0 * kPi, k))
                        for (double d : pos_offsets) eval(1.0, ab + d, ab, gc, beta, 2);
                    // 4: A leads and pins gamma_A = -pi; joint win regardless of alpha_B.
                    for (double d : neq_offsets) eval(0.0, -kPi, -kPi + d, gc, beta, 4);
                    // 5: B' leads and pins alpha_B = -pi.
                    for (double d : neq_offsets) eval(1.0, -kPi + d, -kPi, gc, beta, 5);
                }
                // 3: C' leads with gamma_C in [-pi, -pi/2), A and B' in their ranges.
                for (double gc : linspace(-kPi, -kPi / 2.0 - 0.2, k))
                    for (double ga : linspace(-2.0 * kPi + 0.2, -kPi - 0.2, k))
                        for (double d : pos_offsets) eval(2.0, ga, ga + d, gc, beta, 3);
                // 6: C' leads and pins gamma_C = -pi, B' in (pi, 2pi).
                for (double ab : linspace(kPi + 0.2, 2.0 * kPi - 0.2, k))
                    for (double ga : {-2.0, -4.0, -5.5}) eval(2.0, ga, ab, -kPi, beta, 6);
            }
            return out;
        }});

    return claims;
}

std::vector<ClaimReport> audit(const std::vector<std::string>& ids, const GridConfig& cfg,
                               double tol, std::vector<AuditRecord>* records) {
    if (ids.empty()) throw std::invalid_argument("audit: empty claim subset");
    const std::vector<Claim> all = registry();
    std::vector<const Claim*> selected;
    for (const std::string& id : ids) {
        auto it = std::find_if(all.begin(), all.end(),
                               [&](const Claim& c) { return c.id == id; });
        if (it == all.end()) throw std::invalid_argument("audit: unknown claim id '" + id + "'");
        selected.push_back(&*it);
    }
    // Reports in registry order regardless of how ids were listed.
    std::sort(selected.begin(), selected.end(), [&](const Claim* a, const Claim* b) {
        return a - all.data() < b - all.data();
    });
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    std::vector<ClaimReport> reports;
    for (const Claim* c : selected) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<AuditRecord> recs = c->run(cfg, tol);
        const auto t1 = std::chrono::steady_clock::now();
        ClaimReport rep;
        rep.claim = c->id;
        rep.description = c->description;
        rep.points = static_cast<long>(recs.size());
        for (const AuditRecord& r : recs) {
            if (r.holds) {
                ++rep.holds_count;
            } else {
                ++rep.fails_count;
                if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(r);
            }
        }
        rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        reports.push_back(std::move(rep));
        if (records) {
            records->insert(records->end(), std::make_move_iterator(recs.begin()),
                            std::make_move_iterator(recs.end()));
        }
    }
    return reports;
}

Marginals replay_record(const AuditRecord& r) {
    const StrategySpec spec = spec_for(r.claim, r.params, r.t);
    const Schedule sched = build_schedule(spec);
    return marginals(position_distribution(evolve(initial_state(), sched.coins)));
}

std::string record_to_json(const AuditRecord& r) {
    std::ostringstream os;
    os << "{\"claim\":\"" << r.claim << "\",\"params\":{";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) os << ',';
        first = false;
        os << '"' << k << "\":" << fmt17(v);
    }
    os << "},\"t\":" << r.t << ",\"holds\":" << (r.holds ? "true" : "false")
       << ",\"marginals\":{\"p_left\":" << fmt17(r.marg.p_left)
       << ",\"p_right\":" << fmt17(r.marg.p_right)
       << ",\"p_down\":" << fmt17(r.marg.p_down)
       << ",\"p_up\":" << fmt17(r.marg.p_up) << "}}";
    return os.str();
}

std::string report_to_json(const ClaimReport& r) {
    std::ostringstream os;
    os << "{\"claim\":\"" << r.claim << "\",\"description\":\"" << r.description
       << "\",\"points\":" << r.points << ",\"holds\":" << r.holds_count
       << ",\"fails\":" << r.fails_count << ",\"counterexamples\":[";
    bool first = true;
    for (const AuditRecord& c : r.counterexamples) {
        if (!first) os << ',';
        first = false;
        os << record_to_json(c);
    }
    os << "]}";
    return os.str();
}

}  // namespace qpg
