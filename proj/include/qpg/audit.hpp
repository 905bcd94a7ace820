#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qpg/strategy.hpp"

namespace qpg {

struct GridConfig {
    int points_per_axis = 9;
    std::vector<int> steps;       // empty: use each claim's default t list
    double epsilon_min = 1e-3;    // radians; the "smallest allowed" angle
};

/// One evaluated grid point. `params` is ordered so serialization is
/// deterministic; the keys are sufficient to rebuild the game.
struct AuditRecord {
    std::string claim;
    std::vector<std::pair<std::string, double>> params;
    int t = 0;
    bool holds = false;
    Marginals marg;
};

struct ClaimReport {
    std::string claim;
    std::string description;
    long points = 0;
    long holds_count = 0;
    long fails_count = 0;
    std::vector<AuditRecord> counterexamples;  // at most 10
    double wall_seconds = 0.0;                 // never serialized to data files
};

struct Claim {
    std::string id;
    std::string description;
    std::string parameter_domain;
    std::vector<int> default_steps;
    std::function<std::vector<AuditRecord>(const GridConfig&, double tol)> run;
};

/// The ten registered claims, C1..C10, in order.
std::vector<Claim> registry();

/// Runs the named claims (every id must exist) and aggregates reports.
/// When `records` is non-null, all per-point records are appended to it in
/// claim-id then grid order.
std::vector<ClaimReport> audit(const std::vector<std::string>& ids, const GridConfig& cfg,
                               double tol, std::vector<AuditRecord>* records = nullptr);

/// Rebuilds the game encoded by a record and returns its marginals;
/// counterexamples replay bit-for-bit.
Marginals replay_record(const AuditRecord& r);

std::string record_to_json(const AuditRecord& r);
std::string report_to_json(const ClaimReport& r);

}  // namespace qpg
