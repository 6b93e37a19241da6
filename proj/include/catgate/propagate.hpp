#pragma once

#include <vector>

#include "catgate/catstates.hpp"
#include "catgate/hamiltonian.hpp"
#include "catgate/kernels.hpp"
#include "catgate/model.hpp"

namespace catgate {

/// Mixed state on the full product space.
struct DensityMatrix {
    DensityMatrix(Matrix m, SpaceDescriptor space) : mat(std::move(m)), space(space) {
        if (mat.rows() != mat.cols() || mat.rows() != space.dim())
            throw InputError("density matrix dimension does not match its space");
    }

    static DensityMatrix from_pure(const StateVector& psi);

    int dim() const { return static_cast<int>(mat.rows()); }
    double trace() const { return mat.trace().real(); }
    double hermiticity_error() const { return (mat - mat.adjoint()).cwiseAbs().maxCoeff(); }
    /// Smallest eigenvalue; negative values signal loss of positivity.
    double min_eigenvalue() const;

    Matrix mat;
    SpaceDescriptor space;
};

struct Collapse {
    double rate;  // 1/us
    Operator op;
};
using CollapseSet = std::vector<Collapse>;

/// The dissipation channels: photon decay of both resonators, the three
/// qutrit relaxation paths and pure dephasing of |e> and |f>. Channels
/// with zero rate are omitted.
CollapseSet build_collapse_set(const NoiseParams& noise, const SpaceDescriptor& space);

enum class ConvergenceMode { off, halve_and_compare };

/// Sampled expectation values along a propagation.
struct TrajectoryRow {
    double t;
    double trace;  // Tr rho, or |psi|^2 for pure states
    double n_a;
    double n_b;
    double pop_g, pop_e, pop_f;
};

struct TrajectorySink {
    int stride = 100;  // record every stride-th step (plus first and last)
    std::vector<TrajectoryRow> rows;
};

struct IntegratorConfig {
    int samples_per_period = 40;  // of the fastest rotating term
    double max_step = 1e-3;       // us, cap for (quasi-)static Hamiltonians
    ConvergenceMode convergence = ConvergenceMode::off;
    double convergence_tol = 1e-7;
    kernels::Backend backend = kernels::Backend::openmp;
    TrajectorySink* trajectory = nullptr;
};

/// Fixed-step RK4 solution of d psi/dt = -i H(t) psi over [0, duration],
/// step = min(max_step, 2pi/(max_frequency * samples_per_period)). No
/// renormalization is applied; norm drift beyond 1e-6 throws AccuracyError.
StateVector schrodinger(const TimeDependentHamiltonian& h, const StateVector& psi0,
                        double duration, const IntegratorConfig& cfg);

/// Fixed-step RK4 solution of the master equation
///   d rho/dt = -i[H(t), rho] + sum_k rate_k (L rho L^dag - {L^dag L, rho}/2)
/// with the same step rule. Trace drift beyond 1e-6 or Hermiticity error
/// beyond 1e-8 at the end of the run throws AccuracyError.
DensityMatrix lindblad(const TimeDependentHamiltonian& h, const DensityMatrix& rho0,
                       const CollapseSet& collapse, double duration,
                       const IntegratorConfig& cfg);

/// Closed-form phase acquired by the Fock component (n_a, n_b) of the
/// ground-qutrit block after both operations:
///   exp(i n_a (lambda_a t1 + lambda_a_t t2)) * exp(i n_a n_b chi t1).
Complex analytic_phase_factor(double t1, double t2, const DerivedParams& derived,
                              int n_a_photons, int n_b_photons);

/// Exact evolution under the diagonal effective Hamiltonian of the given
/// operation (1 or 2): per-Fock-component phase multiplication on the
/// ground-qutrit block. Throws InputError if psi has support outside it.
StateVector analytic_effective_evolve(const StateVector& psi, const DerivedParams& derived,
                                      int stage, double t);

} // namespace catgate
