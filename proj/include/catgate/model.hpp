#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "catgate/errors.hpp"

namespace catgate {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Config boundary units: frequencies are quoted as nu = omega/2pi in GHz
/// or MHz; internally everything is angular frequency in rad/us and time
/// in us (1 MHz = 1 cycle/us).
inline double ghz_to_rad_us(double nu_ghz) { return two_pi * 1e3 * nu_ghz; }
inline double mhz_to_rad_us(double nu_mhz) { return two_pi * nu_mhz; }
inline double rad_us_to_ghz(double omega) { return omega / (two_pi * 1e3); }
inline double rad_us_to_mhz(double omega) { return omega / two_pi; }

/// Ratios of the spurious couplings to the intended ones. The defaults are
/// the transmon matrix-element ratios.
struct CouplingRatios {
    double gp_over_g = std::sqrt(2.0);
    double mup_over_mu = 1.0 / std::sqrt(2.0);
    double gtp_over_gt = std::sqrt(2.0);
};

/// Physical system parameters, all angular frequencies in rad/us.
struct SystemParams {
    double omega_eg;    // g<->e transition
    double omega_fe;    // e<->f transition
    double omega_a;     // resonator a, first operation
    double omega_b;     // resonator b, first operation
    double omega_a_t;   // resonator a, second operation (retuned)
    double omega_b_t;   // resonator b, second operation (retuned)
    double g;           // a <-> (g,e) coupling
    double mu;          // b <-> (e,f) coupling
    std::optional<double> g_t;  // second-operation coupling; auto-solved when unset
    CouplingRatios ratios;
    double g_ab;        // inter-resonator crosstalk, first operation
    double g_ab_t;      // inter-resonator crosstalk, second operation
};

/// Decoherence rates in 1/us.
struct NoiseParams {
    double kappa_a = 0.0;      // photon decay, resonator a
    double kappa_b = 0.0;      // photon decay, resonator b
    double gamma_eg = 0.0;     // |e> -> |g> relaxation
    double gamma_fe = 0.0;     // |f> -> |e> relaxation
    double gamma_fg = 0.0;     // |f> -> |g> relaxation
    double gamma_phi_e = 0.0;  // |e> dephasing
    double gamma_phi_f = 0.0;  // |f> dephasing
};

/// Everything computable from SystemParams: detunings, effective rates,
/// resolved couplings and the two operation durations.
struct DerivedParams {
    double delta_a;      // omega_eg - omega_a, < 0
    double delta_b;      // omega_fe - omega_b, > 0
    double delta_a_p;    // omega_fe - omega_a
    double delta_b_p;    // omega_eg - omega_b
    double delta_a_t;    // omega_eg - omega_a_t, > 0
    double delta_a_tp;   // omega_a_t - omega_fe
    double Delta;        // |delta_b| - |delta_a|
    double Delta_ab;     // omega_a - omega_b
    double Delta_ab_t;   // omega_a_t - omega_b_t
    double lambda_a;     // g^2 / delta_a
    double lambda_b;     // mu^2 / delta_b
    double lambda;       // (g mu / 2)(1/|delta_a| + 1/|delta_b|)
    double chi;          // lambda^2 / Delta
    double lambda_a_t;   // g_t^2 / delta_a_t
    double g_t;          // resolved second-operation coupling
    double g_p;          // spurious a <-> (e,f) coupling
    double mu_p;         // spurious b <-> (g,e) coupling
    double g_tp;         // spurious second-operation coupling
    double t1;           // first operation duration, pi/|chi|
    double t2;           // second operation duration

    /// Residual of the photon-number phase cancellation between the two
    /// operations; 0 when g_t is auto-solved.
    double stark_residual() const { return lambda_a * t1 + lambda_a_t * t2; }
};

/// Default parameter set used throughout: 3D-transmon-style frequencies,
/// g/2pi = mu/2pi = 95 MHz, crosstalk at 1% of g.
SystemParams default_system_params();

/// Default decoherence rates (lifetimes 60/30/150 us, dephasing 20 us,
/// photon lifetimes 300 us).
NoiseParams default_noise_params();

/// Computes all derived quantities. Throws ConfigError on sign-convention
/// violations and Delta == 0.
DerivedParams derive(const SystemParams& params);

/// Solves g_t from the requirement that the second operation undo the
/// first operation's photon-number phase: g_t = g sqrt(delta_a_t/|delta_a|).
double solve_g_tilde(const SystemParams& params);

enum class RegimeStatus { pass, warn, fail };

struct RegimeCheck {
    std::string name;
    double ratio;
    RegimeStatus status;
};

struct RegimeThresholds {
    double pass_min = 5.0;
    double warn_min = 3.0;
};

struct RegimeReport {
    std::vector<RegimeCheck> checks;
    double stark_residual = 0.0;
    bool g_t_explicit = false;

    bool any_fail() const;
    bool any_warn() const;
};

/// Ratio audit of the dispersive-regime assumptions. Reporting only; never
/// throws on bad ratios.
RegimeReport validate_regime(const SystemParams& params, const DerivedParams& derived,
                             const RegimeThresholds& thresholds = {});

const char* to_string(RegimeStatus s);

} // namespace catgate
