#pragma once

#include <filesystem>
#include <string>

#include "qpg/strategy.hpp"

namespace qpg {

/// A fully resolved scenario: the strategy to run plus verdict settings.
struct ScenarioConfig {
    StrategySpec spec;
    double tol = 1e-9;
    VerdictMode mode = VerdictMode::SignPattern;
    double epsilon_min = 1e-3;
};

/// Parses a scenario from text. Two encodings are accepted: a flat
/// key/value format with [player.X] sections, and JSON (detected by a
/// leading '{'). Angle values may be written as "eps" or "-eps", resolving
/// to +-epsilon_min. Throws std::invalid_argument on malformed input.
ScenarioConfig parse_scenario(const std::string& text);

ScenarioConfig load_scenario(const std::filesystem::path& path);

}  // namespace qpg
