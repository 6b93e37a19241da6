#pragma once

#include <vector>

#include "catgate/hilbert.hpp"
#include "catgate/model.hpp"

namespace catgate {

/// One co-rotating interaction term. Evaluation contributes
///   amplitude * e^{i detuning t} * op + h.c.
/// so the assembled Hamiltonian is Hermitian by construction.
struct RotatingTerm {
    double amplitude;  // rad/us
    double detuning;   // rad/us
    Operator op;       // the non-Hermitian half
};

/// Hamiltonian of the form  static_part + sum_j amp_j e^{i d_j t} op_j + h.c.
struct TimeDependentHamiltonian {
    TimeDependentHamiltonian(Operator static_part, std::vector<RotatingTerm> terms);

    const SpaceDescriptor& space() const { return *static_part.space; }
    int dim() const { return static_part.dim(); }

    /// Largest |detuning| over the rotating terms; 0 for a static Hamiltonian.
    /// Drives the integrator step control.
    double max_frequency() const;

    /// Dense Hermitian matrix at time t.
    Operator evaluate(double t) const;

    Operator static_part;
    std::vector<RotatingTerm> terms;
};

/// First operation, intended couplings only: g on a<->(g,e) rotating at
/// delta_a plus mu on b<->(e,f) rotating at delta_b.
TimeDependentHamiltonian stage1_ideal(const SystemParams& params, const DerivedParams& derived,
                                      const SpaceDescriptor& space);

/// First operation with the spurious qutrit couplings (g_p, mu_p) and the
/// inter-resonator crosstalk term g_ab * e^{-i Delta_ab t} a b^dag + h.c.
TimeDependentHamiltonian stage1_full(const SystemParams& params, const DerivedParams& derived,
                                     const SpaceDescriptor& space);

/// Second operation, intended coupling only: g_t on a<->(g,e) at delta_a_t.
TimeDependentHamiltonian stage2_ideal(const SystemParams& params, const DerivedParams& derived,
                                      const SpaceDescriptor& space);

/// Second operation with the spurious coupling g_tp and crosstalk.
TimeDependentHamiltonian stage2_full(const SystemParams& params, const DerivedParams& derived,
                                     const SpaceDescriptor& space);

/// Static dispersive Hamiltonian of the first operation. With
/// include_e_f_levels the full three-level form is built (Stark shifts of
/// all levels plus the conditional-phase term on both |g> and |f>);
/// without it only the ground-subspace part
///   -lambda_a n_a |g><g| - chi n_a n_b |g><g|.
TimeDependentHamiltonian effective_stage1(const SystemParams& params,
                                          const DerivedParams& derived,
                                          const SpaceDescriptor& space,
                                          bool include_e_f_levels);

/// Static dispersive Hamiltonian of the second operation:
///   -lambda_a_t n_a |g><g|.
TimeDependentHamiltonian effective_stage2(const SystemParams& params,
                                          const DerivedParams& derived,
                                          const SpaceDescriptor& space);

/// The crosstalk rotating term alone (first/second operation), for model
/// tiers that add it on top of the effective Hamiltonians.
RotatingTerm crosstalk_term_stage1(const SystemParams& params, const DerivedParams& derived,
                                   const SpaceDescriptor& space);
RotatingTerm crosstalk_term_stage2(const SystemParams& params, const DerivedParams& derived,
                                   const SpaceDescriptor& space);

} // namespace catgate
