#include "catgate/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <tuple>

namespace catgate {

namespace {

bool noise_free(const NoiseParams& n) {
    return n.kappa_a == 0 && n.kappa_b == 0 && n.gamma_eg == 0 && n.gamma_fe == 0 &&
           n.gamma_fg == 0 && n.gamma_phi_e == 0 && n.gamma_phi_f == 0;
}

double leakage_of(const Eigen::VectorXd& weights, const SpaceDescriptor& sp) {
    double out = 0.0;
    for (int q = 1; q < 3; ++q)
        for (int ia = 0; ia < sp.n_a; ++ia)
            for (int ib = 0; ib < sp.n_b; ++ib) out += weights[sp.index(q, ia, ib)];
    return out;
}

struct TierOutput {
    std::optional<StateVector> psi;
    std::optional<DensityMatrix> rho;
    GateDiagnostics diag;
};

struct StagePair {
    TimeDependentHamiltonian h1;
    TimeDependentHamiltonian h2;
};

StagePair tier_hamiltonians(ModelTier tier, const SystemParams& p, const DerivedParams& d,
                            const SpaceDescriptor& space) {
    switch (tier) {
        case ModelTier::blue: {
            TimeDependentHamiltonian h1 = effective_stage1(p, d, space, false);
            h1.terms.push_back(crosstalk_term_stage1(p, d, space));
            TimeDependentHamiltonian h2 = effective_stage2(p, d, space);
            h2.terms.push_back(crosstalk_term_stage2(p, d, space));
            return {std::move(h1), std::move(h2)};
        }
        case ModelTier::red:
            return {stage1_full(p, d, space), stage2_full(p, d, space)};
        case ModelTier::green:
        default:
            return {effective_stage1(p, d, space, false), effective_stage2(p, d, space)};
    }
}

TierOutput propagate_tier(ModelTier tier, const StateVector& psi_in, const SystemParams& p,
                          const DerivedParams& d, const NoiseParams& noise,
                          const GateSettings& st) {
    TierOutput out;
    const double in_norm = psi_in.norm();

    if (tier == ModelTier::green) {
        StateVector psi = analytic_effective_evolve(psi_in, d, 1, d.t1);
        psi = analytic_effective_evolve(psi, d, 2, d.t2);
        out.diag.norm_drift = std::abs(psi.norm() - in_norm);
        out.diag.leakage_ef = leakage_of(psi.amps.cwiseAbs2(), st.space);
        out.psi = std::move(psi);
        return out;
    }

    const StagePair stages = tier_hamiltonians(tier, p, d, st.space);
    if (noise_free(noise)) {
        StateVector psi = schrodinger(stages.h1, psi_in, d.t1, st.integrator);
        psi = schrodinger(stages.h2, psi, d.t2, st.integrator);
        out.diag.norm_drift = std::abs(psi.norm() - in_norm);
        out.diag.leakage_ef = leakage_of(psi.amps.cwiseAbs2(), st.space);
        out.psi = std::move(psi);
        return out;
    }

    const CollapseSet collapse = build_collapse_set(noise, st.space);
    DensityMatrix rho = DensityMatrix::from_pure(psi_in);
    const double in_trace = rho.trace();
    rho = lindblad(stages.h1, rho, collapse, d.t1, st.integrator);
    rho = lindblad(stages.h2, rho, collapse, d.t2, st.integrator);
    out.diag.trace_drift = std::abs(rho.trace() - in_trace);
    out.diag.leakage_ef = leakage_of(rho.mat.diagonal().real(), st.space);
    out.rho = std::move(rho);
    return out;
}

DerivedParams derive_checked(const SystemParams& p, const GateSettings& st) {
    const DerivedParams d = derive(p);
    const RegimeReport report = validate_regime(p, d, st.regime);
    if (report.any_fail())
        throw ConfigError("dispersive-regime audit has failing ratios; run the validate "
                          "command for the full report");
    return d;
}

double score(const TierOutput& out, const StateVector& psi_id) {
    if (out.psi) return std::abs(psi_id.amps.dot(out.psi->amps));
    return fidelity(*out.rho, psi_id);
}

} // namespace

const char* tier_name(ModelTier t) {
    switch (t) {
        case ModelTier::green: return "green";
        case ModelTier::blue: return "blue";
        case ModelTier::red: return "red";
    }
    return "?";
}

ModelTier tier_from_name(const std::string& name) {
    if (name == "green") return ModelTier::green;
    if (name == "blue") return ModelTier::blue;
    if (name == "red") return ModelTier::red;
    throw InputError("unknown tier '" + name + "' (expected green, blue or red)");
}

double fidelity(const DensityMatrix& rho, const StateVector& psi_id) {
    if (rho.dim() != psi_id.dim()) throw InputError("fidelity: dimension mismatch");
    const Complex q = psi_id.amps.dot(rho.mat * psi_id.amps);
    if (q.real() < -1e-8)
        throw AccuracyError("fidelity quadratic form is negative (" + std::to_string(q.real()) +
                            "); density matrix is not physical");
    return std::sqrt(std::max(0.0, q.real()));
}

GateResult run_gate(ModelTier tier, const InitialStateSpec& spec, const SystemParams& params,
                    const NoiseParams& noise, const GateSettings& st) {
    const auto start = std::chrono::steady_clock::now();
    const DerivedParams d = derive_checked(params, st);

    const StateVector psi_in = input_superposition(spec, st.enc, st.space);
    const StateVector psi_id = ideal_output(spec, st.enc, st.space);

    TierOutput out = propagate_tier(tier, psi_in, params, d, noise, st);

    GateResult r{};
    r.tier = tier;
    r.theta = spec.theta;
    r.phi = spec.phi;
    r.alpha = st.enc.alpha.real();
    r.kappa_inv = noise.kappa_a > 0 ? 1.0 / noise.kappa_a
                                    : std::numeric_limits<double>::infinity();
    r.fidelity = score(out, psi_id);
    r.t1 = d.t1;
    r.t2 = d.t2;
    r.diag = out.diag;
    r.diag.leakage_flagged = out.diag.leakage_ef > st.leakage_bound;
    r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::array<TruthTableRow, 4> truth_table(ModelTier tier, const SystemParams& params,
                                         const NoiseParams& noise, const GateSettings& st) {
    const DerivedParams d = derive_checked(params, st);
    std::array<TruthTableRow, 4> rows;

    const bool pure = tier == ModelTier::green || noise_free(noise);
    const StateVector basis00 = two_qubit_logical(LogicalBits::b00, st.enc, st.space);

    for (int i = 0; i < 4; ++i) {
        const auto bits = static_cast<LogicalBits>(i);
        const StateVector basis = two_qubit_logical(bits, st.enc, st.space);
        TruthTableRow row{bits, 0.0, 0.0};

        if (pure) {
            const TierOutput out = propagate_tier(tier, basis, params, d, noise, st);
            const Complex overlap = basis.amps.dot(out.psi->amps);
            row.phase = std::arg(overlap);
            row.magnitude = std::abs(overlap);
        } else {
            const TierOutput direct = propagate_tier(tier, basis, params, d, noise, st);
            row.magnitude = fidelity(*direct.rho, basis);
            if (i == 0) {
                row.phase = 0.0;  // reference
            } else {
                StateVector super(basis00.amps + basis.amps, st.space);
                super.amps /= super.norm();
                const TierOutput out = propagate_tier(tier, super, params, d, noise, st);
                // coherence <s| rho |00> carries the gate phase of |s>
                // relative to |00>
                const Complex coh = basis.amps.dot(out.rho->mat * basis00.amps);
                row.phase = std::arg(coh);
            }
        }
        rows[i] = row;
    }
    return rows;
}

std::vector<SweepRecord> sweep_kappa(const std::vector<double>& kappa_inv_grid,
                                     const std::vector<InitialStateSpec>& specs,
                                     const std::vector<ModelTier>& tiers,
                                     const SystemParams& params, const NoiseParams& noise,
                                     const GateSettings& st, int jobs) {
    if (kappa_inv_grid.empty()) throw InputError("empty kappa grid");
    if (specs.empty()) throw InputError("no initial states given");
    if (tiers.empty()) throw InputError("no tiers given");
    for (double k : kappa_inv_grid)
        if (k <= 0) throw InputError("kappa_inv grid values must be positive");

    struct Cell {
        ModelTier tier;
        InitialStateSpec spec;
        double kappa_inv;
    };
    std::vector<Cell> cells;
    for (ModelTier t : tiers)
        for (const auto& s : specs)
            for (double k : kappa_inv_grid) cells.push_back({t, s, k});

    std::vector<SweepRecord> records(cells.size());
    const int n = static_cast<int>(cells.size());

#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) if (jobs > 1 && n > 1)
    for (int i = 0; i < n; ++i) {
        const Cell& c = cells[i];
        NoiseParams cell_noise = noise;
        cell_noise.kappa_a = 1.0 / c.kappa_inv;
        cell_noise.kappa_b = 1.0 / c.kappa_inv;
        try {
            records[i] = {run_gate(c.tier, c.spec, params, cell_noise, st), "ok"};
        } catch (const std::exception& e) {
            GateResult r{};
            r.tier = c.tier;
            r.theta = c.spec.theta;
            r.phi = c.spec.phi;
            r.alpha = st.enc.alpha.real();
            r.kappa_inv = c.kappa_inv;
            r.fidelity = std::numeric_limits<double>::quiet_NaN();
            records[i] = {r, e.what()};
        }
    }

    // rows are generated in deterministic cell order; keep them sorted by
    // (tier, theta, phi, kappa_inv) for output stability
    std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        const auto key = [](const SweepRecord& r) {
            return std::make_tuple(static_cast<int>(r.result.tier), r.result.theta,
                                   r.result.phi, r.result.kappa_inv);
        };
        return key(a) < key(b);
    });
    return records;
}

std::vector<TierGap> tier_gaps(const std::vector<SweepRecord>& records) {
    std::vector<TierGap> gaps;
    for (const auto& blue : records) {
        if (blue.result.tier != ModelTier::blue || blue.status != "ok") continue;
        for (const auto& red : records) {
            if (red.result.tier != ModelTier::red || red.status != "ok") continue;
            if (red.result.theta == blue.result.theta && red.result.phi == blue.result.phi &&
                red.result.kappa_inv == blue.result.kappa_inv) {
                gaps.push_back({blue.result.theta, blue.result.phi, blue.result.kappa_inv,
                                blue.result.fidelity, red.result.fidelity,
                                blue.result.fidelity - red.result.fidelity});
            }
        }
    }
    return gaps;
}

double quality_factor(double omega, double kappa_inv) {
    if (kappa_inv <= 0) throw InputError("kappa_inv must be positive");
    return omega * kappa_inv;
}

std::vector<QualityFactorRow> quality_factor_report(const SystemParams& p, double kappa_inv) {
    std::vector<QualityFactorRow> rows;
    auto add = [&](const std::string& name, double omega, std::string note = {}) {
        rows.push_back({name, rad_us_to_ghz(omega), quality_factor(omega, kappa_inv),
                        std::move(note)});
    };
    // Q for resonator a is often cross-checked against the value at the
    // qutrit g-e frequency; print that alongside to make the difference
    // explicit.
    const double q_at_eg = quality_factor(p.omega_eg, kappa_inv);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "at the g-e transition frequency (%.3g GHz) Q would be %.3g",
                  rad_us_to_ghz(p.omega_eg), q_at_eg);
    add("a (operation 1)", p.omega_a, buf);
    add("b (operation 1)", p.omega_b);
    add("a (operation 2)", p.omega_a_t);
    add("b (operation 2)", p.omega_b_t);
    return rows;
}

std::vector<InitialStateSpec> default_initial_states() {
    const double pi4 = two_pi / 8.0, pi3 = two_pi / 6.0;
    return {InitialStateSpec(pi4, pi4), InitialStateSpec(pi3, pi3), InitialStateSpec(pi4, pi3),
            InitialStateSpec(pi3, pi4)};
}

} // namespace catgate
