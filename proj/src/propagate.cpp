#include "catgate/propagate.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace catgate {

namespace {

using kernels::Backend;
using kernels::CompactOp;

void apply_left(Backend be, Complex alpha, const CompactOp& s, const Matrix& x, Matrix& y,
                bool adjoint = false) {
    if (be == Backend::reference)
        kernels::reference::apply_left(alpha, s, x, y, adjoint);
    else
        kernels::par::apply_left(alpha, s, x, y, adjoint);
}

void apply_vec(Backend be, Complex alpha, const CompactOp& s, const Vector& x, Vector& y,
               bool adjoint = false) {
    if (be == Backend::reference)
        kernels::reference::apply_vec(alpha, s, x, y, adjoint);
    else
        kernels::par::apply_vec(alpha, s, x, y, adjoint);
}

void sandwich(Backend be, double rate, const CompactOp& s, const Matrix& x, Matrix& y,
              Matrix& scratch) {
    if (be == Backend::reference)
        kernels::reference::sandwich(rate, s, x, y, scratch);
    else
        kernels::par::sandwich(rate, s, x, y, scratch);
}

void add_adjoint(Backend be, Matrix& y) {
    if (be == Backend::reference)
        kernels::reference::add_adjoint(y);
    else
        kernels::par::add_adjoint(y);
}

struct CompiledTerm {
    double amp;
    double det;
    CompactOp op;
};

struct CompiledHamiltonian {
    CompactOp static_op;  // nnz 0 when absent
    std::vector<CompiledTerm> terms;
};

CompiledHamiltonian compile(const TimeDependentHamiltonian& h) {
    CompiledHamiltonian c;
    c.static_op = CompactOp::from_dense(h.static_part.mat);
    for (const auto& t : h.terms) c.terms.push_back({t.amplitude, t.detuning, CompactOp::from_dense(t.op.mat)});
    return c;
}

double step_size(const TimeDependentHamiltonian& h, double duration,
                 const IntegratorConfig& cfg) {
    if (cfg.samples_per_period < 8)
        throw InputError("samples_per_period must be at least 8");
    if (duration <= 0) throw InputError("propagation duration must be positive");
    if (cfg.max_step <= 0) throw InputError("max_step must be positive");
    const double f = h.max_frequency();
    double step = cfg.max_step;
    if (f > 0) step = std::min(step, two_pi / (f * cfg.samples_per_period));
    return step;
}

// Diagonal weights for the trajectory observables.
struct Observables {
    std::vector<double> n_a, n_b;
    std::vector<std::vector<double>> pop;  // per qutrit level

    explicit Observables(const SpaceDescriptor& sp) : pop(3) {
        n_a.resize(sp.dim());
        n_b.resize(sp.dim());
        for (auto& p : pop) p.assign(sp.dim(), 0.0);
        for (int q = 0; q < 3; ++q)
            for (int ia = 0; ia < sp.n_a; ++ia)
                for (int ib = 0; ib < sp.n_b; ++ib) {
                    const int i = sp.index(q, ia, ib);
                    n_a[i] = ia;
                    n_b[i] = ib;
                    pop[q][i] = 1.0;
                }
    }

    TrajectoryRow row(double t, const std::vector<double>& diag) const {
        auto dot = [&](const std::vector<double>& w) {
            double s = 0.0;
            for (size_t i = 0; i < w.size(); ++i) s += w[i] * diag[i];
            return s;
        };
        double tr = 0.0;
        for (double d : diag) tr += d;
        return {t, tr, dot(n_a), dot(n_b), dot(pop[0]), dot(pop[1]), dot(pop[2])};
    }
};

std::vector<double> density_diag(const Matrix& rho) {
    std::vector<double> d(rho.rows());
    for (int i = 0; i < rho.rows(); ++i) d[i] = rho(i, i).real();
    return d;
}

std::vector<double> state_diag(const Vector& psi) {
    std::vector<double> d(psi.size());
    for (int i = 0; i < psi.size(); ++i) d[i] = std::norm(psi[i]);
    return d;
}

StateVector schrodinger_once(const CompiledHamiltonian& hc, const TimeDependentHamiltonian& h,
                             const StateVector& psi0, double duration, double step,
                             const IntegratorConfig& cfg) {
    const Backend be = cfg.backend;
    const long n_steps = static_cast<long>(std::ceil(duration / step - 1e-12));
    const double dt = duration / static_cast<double>(n_steps);

    Vector y = psi0.amps;
    Vector k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), s(y.size());

    auto rhs = [&](double t, const Vector& in, Vector& out) {
        out.setZero();
        const Complex minus_i(0.0, -1.0);
        if (hc.static_op.nnz() > 0) apply_vec(be, minus_i, hc.static_op, in, out);
        for (const auto& term : hc.terms) {
            const Complex z = term.amp * std::exp(Complex(0.0, term.det * t));
            apply_vec(be, minus_i * z, term.op, in, out);
            apply_vec(be, minus_i * std::conj(z), term.op, in, out, true);
        }
    };

    Observables obs(*psi0.space);
    if (cfg.trajectory) cfg.trajectory->rows.push_back(obs.row(0.0, state_diag(y)));

    for (long i = 0; i < n_steps; ++i) {
        const double t = i * dt;
        rhs(t, y, k1);
        s = y + (dt / 2) * k1;
        rhs(t + dt / 2, s, k2);
        s = y + (dt / 2) * k2;
        rhs(t + dt / 2, s, k3);
        s = y + dt * k3;
        rhs(t + dt, s, k4);
        y += (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (cfg.trajectory && ((i + 1) % cfg.trajectory->stride == 0 || i + 1 == n_steps))
            cfg.trajectory->rows.push_back(obs.row((i + 1) * dt, state_diag(y)));
    }

    const double drift = std::abs(y.norm() - psi0.amps.norm());
    if (drift > 1e-6)
        throw AccuracyError("norm drift " + std::to_string(drift) +
                            " exceeds 1e-6; decrease max_step or raise samples_per_period");
    return StateVector(std::move(y), psi0.space);
}

DensityMatrix lindblad_once(const CompiledHamiltonian& hc,
                            const std::vector<std::pair<double, CompactOp>>& collapse,
                            const CompactOp& half_sum, const DensityMatrix& rho0,
                            double duration, double step, const IntegratorConfig& cfg) {
    const Backend be = cfg.backend;
    const long n_steps = static_cast<long>(std::ceil(duration / step - 1e-12));
    const double dt = duration / static_cast<double>(n_steps);
    const int d = rho0.dim();

    Matrix y = rho0.mat;
    Matrix k1(d, d), k2(d, d), k3(d, d), k4(d, d), s(d, d), scratch(d, d);

    auto rhs = [&](double t, const Matrix& in, Matrix& out) {
        out.setZero();
        const Complex minus_i(0.0, -1.0);
        // B = -i H in - (1/2) sum rate L^dag L in; out = B + B^dag gives the
        // commutator and the anticommutator halves in one symmetrization.
        if (hc.static_op.nnz() > 0) apply_left(be, minus_i, hc.static_op, in, out);
        for (const auto& term : hc.terms) {
            const Complex z = term.amp * std::exp(Complex(0.0, term.det * t));
            apply_left(be, minus_i * z, term.op, in, out);
            apply_left(be, minus_i * std::conj(z), term.op, in, out, true);
        }
        if (half_sum.nnz() > 0) apply_left(be, -0.5, half_sum, in, out);
        add_adjoint(be, out);
        for (const auto& [rate, op] : collapse) sandwich(be, rate, op, in, out, scratch);
    };

    Observables obs(rho0.space);
    if (cfg.trajectory) cfg.trajectory->rows.push_back(obs.row(0.0, density_diag(y)));

    for (long i = 0; i < n_steps; ++i) {
        const double t = i * dt;
        rhs(t, y, k1);
        s = y + (dt / 2) * k1;
        rhs(t + dt / 2, s, k2);
        s = y + (dt / 2) * k2;
        rhs(t + dt / 2, s, k3);
        s = y + dt * k3;
        rhs(t + dt, s, k4);
        y += (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (cfg.trajectory && ((i + 1) % cfg.trajectory->stride == 0 || i + 1 == n_steps))
            cfg.trajectory->rows.push_back(obs.row((i + 1) * dt, density_diag(y)));
    }

    const double trace_drift = std::abs(y.trace().real() - rho0.mat.trace().real());
    if (trace_drift > 1e-6)
        throw AccuracyError("trace drift " + std::to_string(trace_drift) +
                            " exceeds 1e-6; decrease max_step or raise samples_per_period");
    DensityMatrix out(std::move(y), rho0.space);
    if (out.hermiticity_error() > 1e-8)
        throw AccuracyError("density matrix lost Hermiticity during propagation");
    return out;
}

} // namespace

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
    if (!psi.space) throw InputError("pure state must live on the full product space");
    return DensityMatrix(psi.amps * psi.amps.adjoint(), *psi.space);
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es((mat + mat.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff();
}

CollapseSet build_collapse_set(const NoiseParams& noise, const SpaceDescriptor& space) {
    CollapseSet set;
    auto add = [&](double rate, Operator op) {
        if (rate < 0) throw InputError("collapse rates must be nonnegative");
        if (rate > 0) set.push_back({rate, std::move(op)});
    };
    add(noise.kappa_a, embed(annihilation(space.n_a), Slot::a, space));
    add(noise.kappa_b, embed(annihilation(space.n_b), Slot::b, space));
    add(noise.gamma_eg, embed(qutrit_transition(Level::e, Level::g), Slot::qutrit, space));
    add(noise.gamma_fe, embed(qutrit_transition(Level::f, Level::e), Slot::qutrit, space));
    add(noise.gamma_fg, embed(qutrit_transition(Level::f, Level::g), Slot::qutrit, space));
    add(noise.gamma_phi_e, embed(qutrit_transition(Level::e, Level::e), Slot::qutrit, space));
    add(noise.gamma_phi_f, embed(qutrit_transition(Level::f, Level::f), Slot::qutrit, space));
    return set;
}

StateVector schrodinger(const TimeDependentHamiltonian& h, const StateVector& psi0,
                        double duration, const IntegratorConfig& cfg) {
    if (!psi0.space || !(*psi0.space == h.space()))
        throw InputError("state and Hamiltonian live on different spaces");
    const CompiledHamiltonian hc = compile(h);
    const double step = step_size(h, duration, cfg);
    StateVector out = schrodinger_once(hc, h, psi0, duration, step, cfg);
    if (cfg.convergence == ConvergenceMode::halve_and_compare) {
        IntegratorConfig quiet = cfg;
        quiet.trajectory = nullptr;
        const StateVector refined = schrodinger_once(hc, h, psi0, duration, step / 2, quiet);
        const double overlap =
            std::abs(out.amps.dot(refined.amps)) / (out.norm() * refined.norm());
        if (std::abs(1.0 - overlap) > cfg.convergence_tol)
            throw AccuracyError("step-halving changed the result by " +
                                std::to_string(std::abs(1.0 - overlap)) +
                                "; integrator not converged");
    }
    return out;
}

DensityMatrix lindblad(const TimeDependentHamiltonian& h, const DensityMatrix& rho0,
                       const CollapseSet& collapse, double duration,
                       const IntegratorConfig& cfg) {
    if (!(rho0.space == h.space()))
        throw InputError("density matrix and Hamiltonian live on different spaces");

    const CompiledHamiltonian hc = compile(h);
    std::vector<std::pair<double, CompactOp>> ops;
    Matrix half_sum_dense = Matrix::Zero(rho0.dim(), rho0.dim());
    for (const auto& c : collapse) {
        if (c.rate < 0) throw InputError("collapse rates must be nonnegative");
        if (c.rate == 0) continue;
        if (c.op.dim() != rho0.dim()) throw InputError("collapse operator dimension mismatch");
        ops.emplace_back(c.rate, CompactOp::from_dense(c.op.mat));
        half_sum_dense += c.rate * (c.op.mat.adjoint() * c.op.mat);
    }
    const CompactOp half_sum = CompactOp::from_dense(half_sum_dense);

    const double step = step_size(h, duration, cfg);
    DensityMatrix out = lindblad_once(hc, ops, half_sum, rho0, duration, step, cfg);
    if (cfg.convergence == ConvergenceMode::halve_and_compare) {
        IntegratorConfig quiet = cfg;
        quiet.trajectory = nullptr;
        const DensityMatrix refined =
            lindblad_once(hc, ops, half_sum, rho0, duration, step / 2, quiet);
        const double diff = (out.mat - refined.mat).cwiseAbs().maxCoeff();
        if (diff > cfg.convergence_tol)
            throw AccuracyError("step-halving changed the density matrix by " +
                                std::to_string(diff) + "; integrator not converged");
    }
    return out;
}

Complex analytic_phase_factor(double t1, double t2, const DerivedParams& d, int n_a_photons,
                              int n_b_photons) {
    const double phase = n_a_photons * (d.lambda_a * t1 + d.lambda_a_t * t2) +
                         n_a_photons * n_b_photons * d.chi * t1;
    return std::exp(Complex(0.0, phase));
}

StateVector analytic_effective_evolve(const StateVector& psi, const DerivedParams& d,
                                      int stage, double t) {
    if (!psi.space) throw InputError("analytic evolution needs a full-space state");
    if (stage != 1 && stage != 2) throw InputError("stage must be 1 or 2");
    const SpaceDescriptor& sp = *psi.space;

    double outside = 0.0;
    for (int q = 1; q < 3; ++q)
        for (int ia = 0; ia < sp.n_a; ++ia)
            for (int ib = 0; ib < sp.n_b; ++ib) outside += std::norm(psi.amps[sp.index(q, ia, ib)]);
    if (outside > 1e-12)
        throw InputError("state has population " + std::to_string(outside) +
                         " outside the ground-qutrit block");

    Vector out = psi.amps;
    for (int ia = 0; ia < sp.n_a; ++ia)
        for (int ib = 0; ib < sp.n_b; ++ib) {
            const double phase = stage == 1 ? (d.lambda_a * ia + d.chi * ia * ib) * t
                                            : d.lambda_a_t * ia * t;
            out[sp.index(0, ia, ib)] *= std::exp(Complex(0.0, phase));
        }
    return StateVector(std::move(out), sp);
}

} // namespace catgate
