#include "qpg/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qpg {

namespace {

using RawMap = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("scenario config: " + msg);
}

double parse_angle(const std::string& raw, double epsilon_min) {
    if (raw == "eps") return epsilon_min;
    if (raw == "-eps") return -epsilon_min;
    try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size()) fail("trailing characters in number '" + raw + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail("cannot parse number '" + raw + "'");
    } catch (const std::out_of_range&) {
        fail("number out of range '" + raw + "'");
    }
}

StrategyKind parse_kind(const std::string& s) {
    if (s == "solo") return StrategyKind::Solo;
    if (s == "alternating") return StrategyKind::AlternatingLevelI;
    if (s == "combined") return StrategyKind::CombinedPerStep;
    fail("unknown kind '" + s + "' (expected solo|alternating|combined)");
}

VerdictMode parse_mode(const std::string& s) {
    if (s == "sign") return VerdictMode::SignPattern;
    if (s == "strict") return VerdictMode::StrictFourWay;
    fail("unknown mode '" + s + "' (expected sign|strict)");
}

std::vector<Player> parse_players(const std::string& s) {
    std::vector<Player> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto p = player_from_string(item);
        if (!p) fail("unknown player '" + item + "'");
        out.push_back(*p);
    }
    if (out.empty()) fail("empty player list");
    return out;
}

ScenarioConfig build(const RawMap& globals, const std::map<std::string, RawMap>& players) {
    ScenarioConfig cfg;
    auto lookup = [&](const std::string& key) -> const std::string* {
        auto it = globals.find(key);
        return it == globals.end() ? nullptr : &it->second;
    };
    if (const auto* v = lookup("epsilon_min")) cfg.epsilon_min = parse_angle(*v, 0.0);
    if (cfg.epsilon_min <= 0.0) fail("epsilon_min must be positive");

    const auto* kind = lookup("kind");
    if (!kind) fail("missing 'kind'");
    cfg.spec.kind = parse_kind(*kind);

    const auto* pl = lookup("players");
    if (!pl) fail("missing 'players'");
    cfg.spec.players = parse_players(*pl);

    const auto* steps = lookup("steps");
    if (!steps) fail("missing 'steps'");
    const double steps_v = parse_angle(*steps, 0.0);
    if (steps_v < 0 || steps_v != static_cast<long>(steps_v)) fail("'steps' must be a nonnegative integer");
    cfg.spec.steps = static_cast<int>(steps_v);

    if (const auto* v = lookup("tol")) cfg.tol = parse_angle(*v, 0.0);
    if (cfg.tol < 0.0) fail("'tol' must be nonnegative");
    if (const auto* v = lookup("mode")) cfg.mode = parse_mode(*v);
    if (const auto* v = lookup("level_two")) {
        if (*v == "true") cfg.spec.cooperation_level_two = true;
        else if (*v == "false") cfg.spec.cooperation_level_two = false;
        else fail("'level_two' must be true or false");
    }

    for (Player p : cfg.spec.players) {
        const std::string name(to_string(p));
        auto it = players.find(name);
        if (it == players.end()) fail("missing [player." + name + "] section");
        CoinParams cp;
        for (const auto& [key, raw] : it->second) {
            if (key == "alpha") cp.alpha = parse_angle(raw, cfg.epsilon_min);
            else if (key == "beta") cp.beta = parse_angle(raw, cfg.epsilon_min);
            else if (key == "gamma") cp.gamma = parse_angle(raw, cfg.epsilon_min);
            else fail("unknown key '" + key + "' in [player." + name + "]");
        }
        cfg.spec.free_params[p] = cp;
    }
    return cfg;
}

ScenarioConfig parse_ini(const std::string& text) {
    RawMap globals;
    std::map<std::string, RawMap> players;
    RawMap* current = &globals;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section at line " + std::to_string(lineno));
            const std::string section = trim(line.substr(1, line.size() - 2));
            if (!section.starts_with("player.")) {
                fail("unknown section '" + section + "' at line " + std::to_string(lineno));
            }
            current = &players[section.substr(7)];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value' at line " + std::to_string(lineno));
        (*current)[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return build(globals, players);
}

ScenarioConfig parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
    // Normalize into the same raw string maps as the flat format.
    RawMap globals;
    std::map<std::string, RawMap> players;
    auto as_string = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        if (v.is_number()) {
            std::ostringstream os;
            os.precision(17);
            os << v.get<double>();
            return os.str();
        }
        fail("unsupported JSON value type");
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "player") {
            if (!value.is_object()) fail("'player' must be an object");
            for (const auto& [name, body] : value.items()) {
                for (const auto& [k, v] : body.items()) players[name][k] = as_string(v);
            }
        } else if (key == "players") {
            if (!value.is_array()) fail("'players' must be an array");
            std::string joined;
            for (const auto& v : value) {
                if (!joined.empty()) joined += ",";
                joined += as_string(v);
            }
            globals["players"] = joined;
        } else {
            globals[key] = as_string(value);
        }
    }
    return build(globals, players);
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail("empty config");
    return text[first] == '{' ? parse_json(text) : parse_ini(text);
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace qpg
