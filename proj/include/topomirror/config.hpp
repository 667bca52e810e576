#pragma once

#include <stdexcept>
#include <string>

#include "topomirror/params.hpp"

namespace topomirror {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Run-level settings shared by all subcommands.
struct RunConfig {
    SystemParams system;
    DisorderSpec disorder;
    std::string preset_name;  // empty when built purely from keys
    int jobs = 1;
    std::string out_dir = ".";
    std::string grid;  // "axis=start:stop:count", parsed by the consumer
    bool allow_combined_disorder = false;
};

// Parses an INI-style file with sections [system], [disorder], [run];
// keys are the struct field names. Rate values accept a unit suffix "g0"
// or "Gamma" (e.g. "J0 = 8 Gamma"), resolved against the plain-number
// gamma0 and Gamma of the same section after all keys are read. '#' and
// ';' start comments. Throws ConfigError on unknown keys or bad values.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

struct GridSpec {
    std::string axis;
    double start = 0.0, stop = 0.0;
    int count = 0;
    std::vector<double> values() const;
};

// "axis=start:stop:count"; start/stop accept "pi" multiples (e.g. "1.5pi").
GridSpec parse_grid(const std::string& text);

// Resolved-config echo for manifests.
std::string config_to_json(const RunConfig& cfg);

}  // namespace topomirror
