#pragma once

#include <array>
#include <string>
#include <vector>

#include "catgate/propagate.hpp"

namespace catgate {

/// Model fidelity tiers, named after the plotting convention:
///   green - dispersive effective Hamiltonians, no decoherence, no crosstalk
///           (exact analytic propagation)
///   blue  - effective Hamiltonians + crosstalk + dissipators
///   red   - full interaction Hamiltonians + dissipators
enum class ModelTier { green, blue, red };

const char* tier_name(ModelTier t);
ModelTier tier_from_name(const std::string& name);

struct GateDiagnostics {
    double trace_drift = 0.0;   // density-matrix path
    double norm_drift = 0.0;    // pure-state path
    double leakage_ef = 0.0;    // final population outside the ground-qutrit block
    bool leakage_flagged = false;
};

struct GateResult {
    ModelTier tier;
    double theta, phi;
    double alpha;
    double kappa_inv;  // us; +inf when photon decay is off
    double fidelity;
    double t1, t2;     // us
    GateDiagnostics diag;
    double runtime_s = 0.0;
};

/// Simulation knobs shared by all experiment operations.
struct GateSettings {
    CatEncoding enc;
    SpaceDescriptor space;
    IntegratorConfig integrator{};
    double leakage_bound = 0.05;
    RegimeThresholds regime{};
};

/// Operation fidelity sqrt(<psi_id| rho |psi_id>), clamped at 0 against
/// negative round-off. Throws AccuracyError if the quadratic form is below
/// -1e-8 (rho is not a valid state).
double fidelity(const DensityMatrix& rho, const StateVector& psi_id);

/// Runs the two-operation gate protocol on the given tier: prepare the
/// angle-parametrized input, propagate the first operation for t1, switch
/// Hamiltonians instantaneously, propagate the second for t2, and score
/// against the ideal controlled-phase output.
/// Requires the regime audit to have no failing ratios.
GateResult run_gate(ModelTier tier, const InitialStateSpec& spec, const SystemParams& params,
                    const NoiseParams& noise, const GateSettings& settings);

struct TruthTableRow {
    LogicalBits input;
    double phase;      // rad; gate phase of this basis state
    double magnitude;  // overlap magnitude (pure tiers) or fidelity (noisy tiers)
};

/// Gate action on the four logical basis states. On pure tiers the phase is
/// arg<expected|psi_out>; on dissipative tiers it is read from the output
/// coherence of a (|00> + |s>)/sqrt(2) input, referenced to |00>.
std::array<TruthTableRow, 4> truth_table(ModelTier tier, const SystemParams& params,
                                         const NoiseParams& noise, const GateSettings& settings);

struct SweepRecord {
    GateResult result;
    std::string status;  // "ok" or the error message
};

/// Runs every (tier, initial state, kappa^-1) combination with
/// kappa_a = kappa_b = 1/kappa_inv. Individual cell failures are recorded
/// in the row status; the sweep continues. Rows come back sorted by
/// (tier, theta, phi, kappa_inv) regardless of worker count.
std::vector<SweepRecord> sweep_kappa(const std::vector<double>& kappa_inv_grid,
                                     const std::vector<InitialStateSpec>& specs,
                                     const std::vector<ModelTier>& tiers,
                                     const SystemParams& params, const NoiseParams& noise,
                                     const GateSettings& settings, int jobs = 1);

struct TierGap {
    double theta, phi, kappa_inv;
    double fidelity_blue, fidelity_red;
    double gap;  // blue - red
};

/// Blue-vs-red fidelity gaps for every (state, kappa) present in both tiers.
std::vector<TierGap> tier_gaps(const std::vector<SweepRecord>& records);

/// Q = omega * kappa_inv (omega in rad/us, kappa_inv in us).
double quality_factor(double omega, double kappa_inv);

struct QualityFactorRow {
    std::string resonator;
    double freq_ghz;
    double q;
    std::string note;
};

/// Quality factors of the four configured resonator frequencies at the
/// given photon lifetime.
std::vector<QualityFactorRow> quality_factor_report(const SystemParams& params,
                                                    double kappa_inv);

/// The four benchmark initial states (theta, phi) in
/// {(pi/4,pi/4), (pi/3,pi/3), (pi/4,pi/3), (pi/3,pi/4)}.
std::vector<InitialStateSpec> default_initial_states();

} // namespace catgate
