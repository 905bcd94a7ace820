#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpg/analytic.hpp"
#include "qpg/audit.hpp"
#include "qpg/classical.hpp"
#include "qpg/config.hpp"
#include "qpg/format.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitBadConfig = 2;
constexpr int kExitRuntime = 3;

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    return out;
}

struct SweepAxis {
    qpg::Player player;
    std::string param;  // alpha|beta|gamma
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

SweepAxis parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 5) {
        throw std::invalid_argument("axis spec must be player:param:lo:hi:count, got '" + text + "'");
    }
    SweepAxis axis;
    auto p = qpg::player_from_string(parts[0]);
    if (!p) throw std::invalid_argument("axis spec: unknown player '" + parts[0] + "'");
    axis.player = *p;
    if (parts[1] != "alpha" && parts[1] != "beta" && parts[1] != "gamma") {
        throw std::invalid_argument("axis spec: parameter must be alpha|beta|gamma");
    }
    axis.param = parts[1];
    axis.lo = std::stod(parts[2]);
    axis.hi = std::stod(parts[3]);
    axis.count = std::stoi(parts[4]);
    if (axis.count < 1) throw std::invalid_argument("axis spec: count must be >= 1");
    return axis;
}

void set_axis_value(qpg::StrategySpec& spec, const SweepAxis& axis, double value) {
    auto it = spec.free_params.find(axis.player);
    if (it == spec.free_params.end()) {
        throw std::invalid_argument("sweep axis names a player absent from the scenario");
    }
    if (axis.param == "alpha") it->second.alpha = value;
    else if (axis.param == "beta") it->second.beta = value;
    else it->second.gamma = value;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const double* tol_override, const std::string& mode_override) {
    qpg::ScenarioConfig cfg = qpg::load_scenario(config_path);
    if (tol_override) cfg.tol = *tol_override;
    if (mode_override == "sign") cfg.mode = qpg::VerdictMode::SignPattern;
    else if (mode_override == "strict") cfg.mode = qpg::VerdictMode::StrictFourWay;
    else if (!mode_override.empty()) throw std::invalid_argument("mode must be sign|strict");

    const qpg::GameResult result = qpg::run_game(cfg.spec, cfg.tol, cfg.mode);
    auto vjson = open_out(out_dir, "verdict.json");
    vjson << qpg::verdict_to_json(result.verdict) << '\n';
    auto csv = open_out(out_dir, "distribution.csv");
    qpg::write_distribution_csv(csv, result.distribution);
    std::cout << qpg::verdict_to_json(result.verdict) << '\n';
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& axis_specs,
              const std::string& out_dir) {
    const qpg::ScenarioConfig cfg = qpg::load_scenario(config_path);
    std::vector<SweepAxis> axes;
    for (const std::string& a : axis_specs) axes.push_back(parse_axis(a));
    if (axes.empty()) throw std::invalid_argument("sweep requires at least one --axis");

    auto out = open_out(out_dir, "sweep.jsonl");
    std::vector<int> idx(axes.size(), 0);
    const long total = [&] {
        long n = 1;
        for (const SweepAxis& a : axes) n *= a.count;
        return n;
    }();
    for (long flat = 0; flat < total; ++flat) {
        long rem = flat;
        // Row-major: last axis varies fastest.
        for (std::size_t ax = axes.size(); ax-- > 0;) {
            idx[ax] = static_cast<int>(rem % axes[ax].count);
            rem /= axes[ax].count;
        }
        qpg::StrategySpec spec = cfg.spec;
        std::ostringstream params;
        params << '{';
        for (std::size_t ax = 0; ax < axes.size(); ++ax) {
            const SweepAxis& a = axes[ax];
            const double v = a.count == 1 ? a.lo : a.lo + (a.hi - a.lo) * idx[ax] / (a.count - 1);
            set_axis_value(spec, a, v);
            if (ax) params << ',';
            params << '"' << qpg::to_string(a.player) << '.' << a.param << "\":" << qpg::fmt17(v);
        }
        params << '}';
        const qpg::GameResult result = qpg::run_game(spec, cfg.tol, cfg.mode);
        out << "{\"params\":" << params.str()
            << ",\"verdict\":" << qpg::verdict_to_json(result.verdict) << "}\n";
    }
    return 0;
}

int cmd_audit(const std::string& claims_arg, int grid, const std::string& t_list, double tol,
              const std::string& out_dir) {
    std::vector<std::string> ids;
    if (claims_arg == "all") {
        for (const qpg::Claim& c : qpg::registry()) ids.push_back(c.id);
    } else {
        std::stringstream ss(claims_arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) ids.push_back(item);
        }
    }
    qpg::GridConfig cfg;
    if (grid > 0) cfg.points_per_axis = grid;
    if (!t_list.empty()) cfg.steps = parse_int_list(t_list);

    std::vector<qpg::AuditRecord> records;
    const std::vector<qpg::ClaimReport> reports = qpg::audit(ids, cfg, tol, &records);

    auto report_out = open_out(out_dir, "audit_report.jsonl");
    for (const qpg::ClaimReport& r : reports) {
        report_out << qpg::report_to_json(r) << '\n';
        std::cerr << r.claim << ": " << r.holds_count << "/" << r.points << " hold ("
                  << r.wall_seconds << " s)\n";
    }
    auto records_out = open_out(out_dir, "audit_records.jsonl");
    for (const qpg::AuditRecord& r : records) records_out << qpg::record_to_json(r) << '\n';
    return 0;
}

int cmd_oracle_check(int grid) {
    const auto points = qpg::param_grid(grid, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    const double dev = qpg::check_engine_against_oracle(points);
    std::cout << "max deviation = " << qpg::fmt17(dev) << '\n';
    return dev < 1e-10 ? 0 : 1;
}

int cmd_classical(bool preset, double p, double p0, double p1, const std::string& pattern,
                  long rounds, long trials, std::uint64_t seed, const std::string& out_dir) {
    qpg::classical::ClassicalParams params{p, p0, p1};
    if (preset) params = qpg::classical::canonical_preset();
    const auto report = qpg::classical::paradox_demo(params, pattern, rounds, trials, seed);
    const std::string json = qpg::classical::paradox_report_to_json(report);
    auto out = open_out(out_dir, "classical.json");
    out << json << '\n';
    std::cout << json << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Parrondo game on the 2D discrete-time quantum walk"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", mode_override, claims_arg, t_list;
    std::vector<std::string> axis_specs;
    double tol = 1e-9;
    bool tol_set = false;
    int grid = 0;

    auto* run = app.add_subcommand("run", "Run a scenario to a verdict and distribution");
    run->add_option("--config", config_path, "Scenario config file")->required();
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--tol", tol, "Tie tolerance override")->each([&](const std::string&) { tol_set = true; });
    run->add_option("--mode", mode_override, "Verdict mode: sign|strict");

    auto* sweep = app.add_subcommand("sweep", "Sweep scenario parameters over a grid");
    sweep->add_option("--config", config_path, "Scenario config file")->required();
    sweep->add_option("--axis", axis_specs, "Axis spec player:param:lo:hi:count")->required();
    sweep->add_option("--out", out_dir, "Output directory");

    auto* audit = app.add_subcommand("audit", "Verify the registered claims on a grid");
    audit->add_option("--claims", claims_arg, "Comma-separated claim ids or 'all'")->required();
    audit->add_option("--grid", grid, "Points per parameter axis");
    audit->add_option("--t", t_list, "Comma-separated step counts");
    audit->add_option("--tol", tol, "Tie tolerance");
    audit->add_option("--out", out_dir, "Output directory");

    auto* oracle = app.add_subcommand("oracle-check", "Engine vs closed-form one-step check");
    int oracle_grid = 11;
    oracle->add_option("--grid", oracle_grid, "Points per axis over [-2pi, 2pi]");

    auto* classical = app.add_subcommand("classical", "Classical Parrondo baseline");
    double p = 0.5, p0 = 0.5, p1 = 0.5;
    std::string pattern = "AABB";
    long rounds = 1000, trials = 10000;
    std::uint64_t seed = 1;
    bool preset = false;
    classical->add_option("--p", p, "Strategy A win probability");
    classical->add_option("--p0", p0, "Strategy B win probability at capital = 0 mod 3");
    classical->add_option("--p1", p1, "Strategy B win probability otherwise");
    classical->add_option("--pattern", pattern, "Mixing pattern, e.g. AABB");
    classical->add_option("--rounds", rounds, "Rounds per trial");
    classical->add_option("--trials", trials, "Monte Carlo trials");
    classical->add_option("--seed", seed, "RNG seed");
    classical->add_flag("--preset", preset, "Use the literature preset (0.495, 0.095, 0.745)");
    classical->add_option("--out", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadConfig;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir, tol_set ? &tol : nullptr, mode_override);
        if (sweep->parsed()) return cmd_sweep(config_path, axis_specs, out_dir);
        if (audit->parsed()) return cmd_audit(claims_arg, grid, t_list, tol, out_dir);
        if (oracle->parsed()) return cmd_oracle_check(oracle_grid);
        if (classical->parsed())
            return cmd_classical(preset, p, p0, p1, pattern, rounds, trials, seed, out_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitBadConfig;
}
