#pragma once

#include <map>
#include <string>
#include <vector>

#include "catgate/experiment.hpp"
#include "catgate/model.hpp"

namespace catgate {

inline constexpr const char* tool_version = "0.1.0";

/// Space/encoding/integrator knobs from the [simulation] section.
struct SimulationSettings {
    int n_a = 10;
    int n_b = 10;
    double alpha = 0.5;
    double tail_epsilon = 1e-9;
    int samples_per_period = 40;
    double max_step = 1e-3;  // us
    double leakage_bound = 0.05;
    RegimeThresholds regime{};
};

/// Raw key-value view of a parsed config, kept for the run manifest.
using ConfigSnapshot = std::map<std::string, std::map<std::string, std::string>>;

struct Config {
    SystemParams system;
    NoiseParams noise;
    SimulationSettings sim;
    ConfigSnapshot snapshot;
};

/// Built-in defaults (the shipped default.ini is this config serialized).
Config default_config();

/// Parses an INI-style document with [system], [noise] and [simulation]
/// sections. Frequencies are given as omega/2pi with _ghz/_mhz suffixes,
/// noise channels as lifetimes with _inv_us suffix ("inf" disables one).
/// Unknown keys and missing required keys are ConfigErrors carrying
/// line/key diagnostics.
Config parse_config(const std::string& text);

/// Reads and parses a config file.
Config load_config(const std::string& path);

/// Canonical text form; parse_config(serialize_config(c)) is value-identical.
std::string serialize_config(const Config& config);

GateSettings make_gate_settings(const Config& config);

} // namespace catgate
