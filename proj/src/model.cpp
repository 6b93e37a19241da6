#include "catgate/model.hpp"

#include <cmath>

namespace catgate {

SystemParams default_system_params() {
    SystemParams p{};
    p.omega_eg = ghz_to_rad_us(6.5);
    p.omega_fe = ghz_to_rad_us(6.0);
    p.omega_a = ghz_to_rad_us(7.5);
    p.omega_b = ghz_to_rad_us(4.9);
    p.omega_a_t = ghz_to_rad_us(5.5);
    p.omega_b_t = ghz_to_rad_us(3.5);
    p.g = mhz_to_rad_us(95.0);
    p.mu = mhz_to_rad_us(95.0);
    p.g_t = std::nullopt;
    p.g_ab = 0.01 * p.g;
    p.g_ab_t = p.g_ab;
    return p;
}

NoiseParams default_noise_params() {
    NoiseParams n{};
    n.kappa_a = 1.0 / 300.0;
    n.kappa_b = 1.0 / 300.0;
    n.gamma_eg = 1.0 / 60.0;
    n.gamma_fe = 1.0 / 30.0;
    n.gamma_fg = 1.0 / 150.0;
    n.gamma_phi_e = 1.0 / 20.0;
    n.gamma_phi_f = 1.0 / 20.0;
    return n;
}

double solve_g_tilde(const SystemParams& p) {
    const double delta_a = p.omega_eg - p.omega_a;
    const double delta_a_t = p.omega_eg - p.omega_a_t;
    if (delta_a >= 0 || delta_a_t <= 0)
        throw ConstraintError(
            "coupling solve needs delta_a < 0 and delta_a_t > 0; got delta_a/2pi = " +
            std::to_string(rad_us_to_ghz(delta_a)) + " GHz, delta_a_t/2pi = " +
            std::to_string(rad_us_to_ghz(delta_a_t)) + " GHz");
    return p.g * std::sqrt(delta_a_t / -delta_a);
}

DerivedParams derive(const SystemParams& p) {
    DerivedParams d{};
    d.delta_a = p.omega_eg - p.omega_a;
    d.delta_b = p.omega_fe - p.omega_b;
    d.delta_a_p = p.omega_fe - p.omega_a;
    d.delta_b_p = p.omega_eg - p.omega_b;
    d.delta_a_t = p.omega_eg - p.omega_a_t;
    d.delta_a_tp = p.omega_a_t - p.omega_fe;

    if (d.delta_a >= 0)
        throw ConfigError("sign convention violated: delta_a = omega_eg - omega_a must be < 0");
    if (d.delta_b <= 0)
        throw ConfigError("sign convention violated: delta_b = omega_fe - omega_b must be > 0");
    if (d.delta_a_t <= 0)
        throw ConfigError("sign convention violated: delta_a_t = omega_eg - omega_a_t must be > 0");

    d.Delta = std::abs(d.delta_b) - std::abs(d.delta_a);
    d.Delta_ab = p.omega_a - p.omega_b;
    d.Delta_ab_t = p.omega_a_t - p.omega_b_t;

    d.lambda_a = p.g * p.g / d.delta_a;
    d.lambda_b = p.mu * p.mu / d.delta_b;
    d.lambda = (p.g * p.mu / 2.0) * (1.0 / std::abs(d.delta_a) + 1.0 / std::abs(d.delta_b));
    if (d.Delta == 0.0)
        throw ConfigError("Delta = |delta_b| - |delta_a| vanishes; chi = lambda^2/Delta is singular");
    d.chi = d.lambda * d.lambda / d.Delta;

    d.g_t = p.g_t ? *p.g_t : solve_g_tilde(p);
    d.lambda_a_t = d.g_t * d.g_t / d.delta_a_t;
    d.g_p = p.ratios.gp_over_g * p.g;
    d.mu_p = p.ratios.mup_over_mu * p.mu;
    d.g_tp = p.ratios.gtp_over_gt * d.g_t;

    d.t1 = two_pi / 2.0 / std::abs(d.chi);  // pi/|chi|
    d.t2 = d.t1;
    return d;
}

bool RegimeReport::any_fail() const {
    for (const auto& c : checks)
        if (c.status == RegimeStatus::fail) return true;
    return false;
}

bool RegimeReport::any_warn() const {
    for (const auto& c : checks)
        if (c.status == RegimeStatus::warn) return true;
    return false;
}

const char* to_string(RegimeStatus s) {
    switch (s) {
        case RegimeStatus::pass: return "pass";
        case RegimeStatus::warn: return "warn";
        case RegimeStatus::fail: return "fail";
    }
    return "?";
}

RegimeReport validate_regime(const SystemParams& p, const DerivedParams& d,
                             const RegimeThresholds& th) {
    RegimeReport report;
    auto add = [&](const std::string& name, double num, double den) {
        const double ratio = std::abs(num) / std::abs(den);
        RegimeStatus s = ratio >= th.pass_min  ? RegimeStatus::pass
                         : ratio >= th.warn_min ? RegimeStatus::warn
                                                : RegimeStatus::fail;
        report.checks.push_back({name, ratio, s});
    };
    add("|delta_a| / g", d.delta_a, p.g);
    add("|delta_b| / mu", d.delta_b, p.mu);
    add("|Delta| / |lambda_a|", d.Delta, d.lambda_a);
    add("|Delta| / |lambda_b|", d.Delta, d.lambda_b);
    add("|Delta| / lambda", d.Delta, d.lambda);
    add("delta_a_t / g_t", d.delta_a_t, d.g_t);
    add("|delta_a_p| / g_p", d.delta_a_p, d.g_p);
    add("|delta_b_p| / mu_p", d.delta_b_p, d.mu_p);
    add("|delta_a_tp| / g_tp", d.delta_a_tp, d.g_tp);

    report.stark_residual = d.stark_residual();
    report.g_t_explicit = p.g_t.has_value();
    return report;
}

} // namespace catgate
