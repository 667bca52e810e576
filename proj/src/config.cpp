#include "topomirror/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "topomirror/util.hpp"

namespace topomirror {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// number with optional trailing "pi" multiplier
double parse_number(const std::string& raw, const std::string& key) {
    std::string v = trim(raw);
    double mult = 1.0;
    if (v.size() > 2 && v.substr(v.size() - 2) == "pi") {
        mult = kPi;
        v = trim(v.substr(0, v.size() - 2));
        if (v.empty() || v == "-") v += "1";
    }
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("bad numeric value for '" + key + "': " + raw);
    return x * mult;
}

// value with optional rate suffix; suffix resolution is deferred
struct RateValue {
    double number = 0.0;
    enum { Plain, UnitG0, UnitGamma } unit = Plain;
};

RateValue parse_rate(const std::string& raw, const std::string& key) {
    std::string v = trim(raw);
    RateValue r;
    auto ends_with = [&](const std::string& suf) {
        return v.size() > suf.size() && v.substr(v.size() - suf.size()) == suf;
    };
    if (ends_with("Gamma")) {
        r.unit = RateValue::UnitGamma;
        v = v.substr(0, v.size() - 5);
    } else if (ends_with("g0")) {
        r.unit = RateValue::UnitG0;
        v = v.substr(0, v.size() - 2);
    }
    r.number = parse_number(v, key);
    return r;
}

std::vector<double> parse_list(const std::string& raw, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_number(item, key));
    }
    return out;
}

bool parse_bool(const std::string& raw, const std::string& key) {
    std::string v = trim(raw);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("bad boolean value for '" + key + "': " + raw);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, RateValue> rates;  // deferred unit resolution
    bool gamma0_set = false, Gamma_set = false;

    std::string section;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("malformed section header at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "system" && section != "disorder" && section != "run")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (section == "system") {
            if (key == "g" || key == "kappa" || key == "Gamma" || key == "J0") {
                rates[key] = parse_rate(val, key);
                if (key == "Gamma") Gamma_set = true;
            } else if (key == "gamma0") {
                cfg.system.gamma0 = parse_number(val, key);
                gamma0_set = true;
            } else if (key == "phi_dim") {
                cfg.system.phi_dim = parse_number(val, key);
            } else if (key == "n_atoms") {
                cfg.system.n_atoms = static_cast<int>(parse_number(val, key));
            } else if (key == "varphi") {
                cfg.system.varphi = parse_number(val, key);
            } else if (key == "phi1") {
                cfg.system.phi1 = parse_number(val, key);
            } else if (key == "detunings") {
                cfg.system.detunings = parse_list(val, key);
            } else if (key == "preset") {
                cfg.preset_name = val;
                cfg.system = preset(val);
                gamma0_set = true;
            } else {
                throw ConfigError("unknown [system] key: " + key);
            }
        } else if (section == "disorder") {
            if (key == "position_frac")
                cfg.disorder.position_frac = parse_number(val, key);
            else if (key == "coupling_frac")
                cfg.disorder.coupling_frac = parse_number(val, key);
            else if (key == "frequency_halfwidth")
                cfg.disorder.frequency_halfwidth = parse_number(val, key);
            else if (key == "seed")
                cfg.disorder.seed = static_cast<std::uint64_t>(parse_number(val, key));
            else if (key == "n_realizations")
                cfg.disorder.n_realizations = static_cast<int>(parse_number(val, key));
            else
                throw ConfigError("unknown [disorder] key: " + key);
        } else if (section == "run") {
            if (key == "jobs")
                cfg.jobs = static_cast<int>(parse_number(val, key));
            else if (key == "out_dir")
                cfg.out_dir = val;
            else if (key == "grid")
                cfg.grid = val;
            else if (key == "allow_combined_disorder")
                cfg.allow_combined_disorder = parse_bool(val, key);
            else
                throw ConfigError("unknown [run] key: " + key);
        } else {
            throw ConfigError("key outside any section at line " + std::to_string(lineno));
        }
    }

    // Unit suffixes resolve against the plain-number gamma0 and Gamma. A
    // dissipationless emitter (gamma0 = 0) pins the unit to Gamma = 1
    // unless Gamma was given plainly.
    if (!gamma0_set) cfg.system.gamma0 = 1.0;
    if (auto it = rates.find("Gamma"); it != rates.end()) {
        if (it->second.unit == RateValue::UnitGamma)
            throw ConfigError("Gamma cannot carry the 'Gamma' suffix");
        cfg.system.Gamma = it->second.unit == RateValue::UnitG0
                               ? it->second.number * cfg.system.gamma0
                               : it->second.number;
        rates.erase(it);
    } else if (cfg.system.gamma0 == 0.0 && !Gamma_set && cfg.preset_name.empty()) {
        cfg.system.Gamma = 1.0;
    }
    for (const auto& [key, rv] : rates) {
        double x = rv.number;
        if (rv.unit == RateValue::UnitG0) {
            if (cfg.system.gamma0 == 0.0)
                throw ConfigError("'" + key + "' uses the g0 suffix but gamma0 = 0");
            x *= cfg.system.gamma0;
        } else if (rv.unit == RateValue::UnitGamma) {
            if (cfg.system.Gamma == 0.0)
                throw ConfigError("'" + key + "' uses the Gamma suffix but Gamma = 0");
            x *= cfg.system.Gamma;
        }
        if (key == "g")
            cfg.system.g = x;
        else if (key == "kappa")
            cfg.system.kappa = x;
        else if (key == "J0")
            cfg.system.J0 = x;
    }

    try {
        cfg.system.validate();
        cfg.disorder.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (cfg.jobs < 1) throw ConfigError("jobs must be positive");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::vector<double> GridSpec::values() const { return linspace(start, stop, count); }

GridSpec parse_grid(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError("grid must be axis=start:stop:count, got: " + text);
    GridSpec g;
    g.axis = trim(text.substr(0, eq));
    std::string rest = text.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError("grid must be axis=start:stop:count, got: " + text);
    g.start = parse_number(rest.substr(0, c1), "grid start");
    g.stop = parse_number(rest.substr(c1 + 1, c2 - c1 - 1), "grid stop");
    g.count = static_cast<int>(parse_number(rest.substr(c2 + 1), "grid count"));
    if (g.count < 1) throw ConfigError("grid count must be positive");
    return g;
}

std::string config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    const auto& s = cfg.system;
    j["system"] = {{"g", s.g},           {"kappa", s.kappa},   {"gamma0", s.gamma0},
                   {"Gamma", s.Gamma},   {"J0", s.J0},         {"phi_dim", s.phi_dim},
                   {"n_atoms", s.n_atoms}, {"varphi", s.varphi}, {"phi1", s.phi1},
                   {"detunings", s.detunings}};
    const auto& d = cfg.disorder;
    j["disorder"] = {{"position_frac", d.position_frac},
                     {"coupling_frac", d.coupling_frac},
                     {"frequency_halfwidth", d.frequency_halfwidth},
                     {"seed", d.seed},
                     {"n_realizations", d.n_realizations}};
    j["run"] = {{"preset", cfg.preset_name},
                {"jobs", cfg.jobs},
                {"out_dir", cfg.out_dir},
                {"grid", cfg.grid},
                {"allow_combined_disorder", cfg.allow_combined_disorder}};
    return j.dump();
}

}  // namespace topomirror
