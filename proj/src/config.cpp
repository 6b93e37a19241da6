#include "catgate/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace catgate {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct RawConfig {
    struct Entry {
        std::string value;
        int line;
    };
    std::map<std::string, std::map<std::string, Entry>> sections;
};

RawConfig parse_raw(const std::string& text) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("unterminated section header", lineno);
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) throw ConfigError("empty section name", lineno);
            continue;
        }
        const size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", lineno);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", lineno);
        if (section.empty())
            throw ConfigError("key outside any section", lineno, key);
        if (raw.sections[section].count(key))
            throw ConfigError("duplicate key", lineno, key);
        raw.sections[section][key] = {value, lineno};
    }
    return raw;
}

class SectionReader {
  public:
    SectionReader(RawConfig& raw, std::string section) : raw_(raw), section_(std::move(section)) {}

    bool has(const std::string& key) const {
        auto sec = raw_.sections.find(section_);
        return sec != raw_.sections.end() && sec->second.count(key);
    }

    double number(const std::string& key) const {
        const auto& e = raw_.sections.at(section_).at(key);
        char* end = nullptr;
        const double v = std::strtod(e.value.c_str(), &end);
        if (end == e.value.c_str() || *end != '\0')
            throw ConfigError("cannot parse number '" + e.value + "'", e.line, key);
        return v;
    }

    double required(const std::string& key) const {
        if (!has(key))
            throw ConfigError("missing required key in [" + section_ + "]", 0, key);
        seen_.insert(key);
        return number(key);
    }

    double optional(const std::string& key, double fallback) const {
        if (!has(key)) return fallback;
        seen_.insert(key);
        return number(key);
    }

    void check_no_unknown() const {
        auto sec = raw_.sections.find(section_);
        if (sec == raw_.sections.end()) return;
        for (const auto& [key, entry] : sec->second)
            if (!seen_.count(key))
                throw ConfigError("unknown key in [" + section_ + "]", entry.line, key);
    }

  private:
    RawConfig& raw_;
    std::string section_;
    mutable std::set<std::string> seen_;
};

// lifetime in us ("inf" allowed) -> rate in 1/us
double inv_us_to_rate(double lifetime) {
    if (lifetime <= 0) throw ConfigError("lifetimes must be positive (use inf to disable)");
    return std::isinf(lifetime) ? 0.0 : 1.0 / lifetime;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Config default_config() {
    Config c{};
    c.system = default_system_params();
    c.noise = default_noise_params();
    c.sim = SimulationSettings{};
    c.snapshot = parse_config(serialize_config(c)).snapshot;
    return c;
}

Config parse_config(const std::string& text) {
    RawConfig raw = parse_raw(text);
    for (const auto& [name, entries] : raw.sections)
        if (name != "system" && name != "noise" && name != "simulation")
            throw ConfigError("unknown section [" + name + "]", 0, name);

    Config c{};

    SectionReader sys(raw, "system");
    c.system.omega_eg = ghz_to_rad_us(sys.required("omega_eg_ghz"));
    c.system.omega_fe = ghz_to_rad_us(sys.required("omega_fe_ghz"));
    c.system.omega_a = ghz_to_rad_us(sys.required("omega_a_ghz"));
    c.system.omega_b = ghz_to_rad_us(sys.required("omega_b_ghz"));
    c.system.omega_a_t = ghz_to_rad_us(sys.required("omega_a_t_ghz"));
    c.system.omega_b_t = ghz_to_rad_us(sys.required("omega_b_t_ghz"));
    c.system.g = mhz_to_rad_us(sys.required("g_mhz"));
    c.system.mu = mhz_to_rad_us(sys.required("mu_mhz"));
    if (sys.has("g_t_mhz")) c.system.g_t = mhz_to_rad_us(sys.optional("g_t_mhz", 0.0));
    c.system.ratios.gp_over_g = sys.optional("gp_over_g", c.system.ratios.gp_over_g);
    c.system.ratios.mup_over_mu = sys.optional("mup_over_mu", c.system.ratios.mup_over_mu);
    c.system.ratios.gtp_over_gt = sys.optional("gtp_over_gt", c.system.ratios.gtp_over_gt);
    c.system.g_ab = sys.has("g_ab_mhz") ? mhz_to_rad_us(sys.optional("g_ab_mhz", 0.0))
                                        : 0.01 * c.system.g;
    c.system.g_ab_t = sys.has("g_ab_t_mhz") ? mhz_to_rad_us(sys.optional("g_ab_t_mhz", 0.0))
                                            : c.system.g_ab;
    sys.check_no_unknown();

    SectionReader noise(raw, "noise");
    c.noise.kappa_a = inv_us_to_rate(noise.required("kappa_a_inv_us"));
    c.noise.kappa_b = inv_us_to_rate(noise.required("kappa_b_inv_us"));
    c.noise.gamma_eg = inv_us_to_rate(noise.required("gamma_eg_inv_us"));
    c.noise.gamma_fe = inv_us_to_rate(noise.required("gamma_fe_inv_us"));
    c.noise.gamma_fg = inv_us_to_rate(noise.required("gamma_fg_inv_us"));
    c.noise.gamma_phi_e = inv_us_to_rate(noise.required("gamma_phi_e_inv_us"));
    c.noise.gamma_phi_f = inv_us_to_rate(noise.required("gamma_phi_f_inv_us"));
    noise.check_no_unknown();

    SectionReader sim(raw, "simulation");
    const SimulationSettings defaults{};
    c.sim.n_a = static_cast<int>(sim.optional("n_a", defaults.n_a));
    c.sim.n_b = static_cast<int>(sim.optional("n_b", defaults.n_b));
    c.sim.alpha = sim.optional("alpha", defaults.alpha);
    c.sim.tail_epsilon = sim.optional("tail_epsilon", defaults.tail_epsilon);
    c.sim.samples_per_period =
        static_cast<int>(sim.optional("samples_per_period", defaults.samples_per_period));
    c.sim.max_step = sim.optional("max_step_us", defaults.max_step);
    c.sim.leakage_bound = sim.optional("leakage_bound", defaults.leakage_bound);
    c.sim.regime.pass_min = sim.optional("regime_pass_min", defaults.regime.pass_min);
    c.sim.regime.warn_min = sim.optional("regime_warn_min", defaults.regime.warn_min);
    sim.check_no_unknown();

    for (const auto& [name, entries] : raw.sections)
        for (const auto& [key, entry] : entries) c.snapshot[name][key] = entry.value;
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const Config& c) {
    std::ostringstream out;
    const auto rate_to_inv = [](double rate) {
        return rate == 0.0 ? std::string("inf") : format_value(1.0 / rate);
    };
    out << "[system]\n";
    out << "omega_eg_ghz = " << format_value(rad_us_to_ghz(c.system.omega_eg)) << "\n";
    out << "omega_fe_ghz = " << format_value(rad_us_to_ghz(c.system.omega_fe)) << "\n";
    out << "omega_a_ghz = " << format_value(rad_us_to_ghz(c.system.omega_a)) << "\n";
    out << "omega_b_ghz = " << format_value(rad_us_to_ghz(c.system.omega_b)) << "\n";
    out << "omega_a_t_ghz = " << format_value(rad_us_to_ghz(c.system.omega_a_t)) << "\n";
    out << "omega_b_t_ghz = " << format_value(rad_us_to_ghz(c.system.omega_b_t)) << "\n";
    out << "g_mhz = " << format_value(rad_us_to_mhz(c.system.g)) << "\n";
    out << "mu_mhz = " << format_value(rad_us_to_mhz(c.system.mu)) << "\n";
    if (c.system.g_t)
        out << "g_t_mhz = " << format_value(rad_us_to_mhz(*c.system.g_t)) << "\n";
    out << "gp_over_g = " << format_value(c.system.ratios.gp_over_g) << "\n";
    out << "mup_over_mu = " << format_value(c.system.ratios.mup_over_mu) << "\n";
    out << "gtp_over_gt = " << format_value(c.system.ratios.gtp_over_gt) << "\n";
    out << "g_ab_mhz = " << format_value(rad_us_to_mhz(c.system.g_ab)) << "\n";
    out << "g_ab_t_mhz = " << format_value(rad_us_to_mhz(c.system.g_ab_t)) << "\n";
    out << "\n[noise]\n";
    out << "kappa_a_inv_us = " << rate_to_inv(c.noise.kappa_a) << "\n";
    out << "kappa_b_inv_us = " << rate_to_inv(c.noise.kappa_b) << "\n";
    out << "gamma_eg_inv_us = " << rate_to_inv(c.noise.gamma_eg) << "\n";
    out << "gamma_fe_inv_us = " << rate_to_inv(c.noise.gamma_fe) << "\n";
    out << "gamma_fg_inv_us = " << rate_to_inv(c.noise.gamma_fg) << "\n";
    out << "gamma_phi_e_inv_us = " << rate_to_inv(c.noise.gamma_phi_e) << "\n";
    out << "gamma_phi_f_inv_us = " << rate_to_inv(c.noise.gamma_phi_f) << "\n";
    out << "\n[simulation]\n";
    out << "n_a = " << c.sim.n_a << "\n";
    out << "n_b = " << c.sim.n_b << "\n";
    out << "alpha = " << format_value(c.sim.alpha) << "\n";
    out << "tail_epsilon = " << format_value(c.sim.tail_epsilon) << "\n";
    out << "samples_per_period = " << c.sim.samples_per_period << "\n";
    out << "max_step_us = " << format_value(c.sim.max_step) << "\n";
    out << "leakage_bound = " << format_value(c.sim.leakage_bound) << "\n";
    out << "regime_pass_min = " << format_value(c.sim.regime.pass_min) << "\n";
    out << "regime_warn_min = " << format_value(c.sim.regime.warn_min) << "\n";
    return out.str();
}

GateSettings make_gate_settings(const Config& c) {
    GateSettings st{
        CatEncoding(c.sim.alpha, std::min(c.sim.n_a, c.sim.n_b), c.sim.tail_epsilon),
        SpaceDescriptor(c.sim.n_a, c.sim.n_b),
    };
    st.integrator.samples_per_period = c.sim.samples_per_period;
    st.integrator.max_step = c.sim.max_step;
    st.leakage_bound = c.sim.leakage_bound;
    st.regime = c.sim.regime;
    return st;
}

} // namespace catgate
