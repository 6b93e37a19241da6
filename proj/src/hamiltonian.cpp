#include "catgate/hamiltonian.hpp"

#include <cmath>

namespace catgate {

namespace {

// a sigma^+_{to,from}: photon annihilation in the given mode joint with a
// qutrit raising transition.
Operator mode_raise(Slot mode, Level from, Level to, const SpaceDescriptor& space) {
    const int n = space.slot_dim(mode);
    return embed(qutrit_transition(from, to), Slot::qutrit, space) *
           embed(annihilation(n), mode, space);
}

Operator crosstalk_op(const SpaceDescriptor& space) {
    // a b^dag
    return embed(annihilation(space.n_a), Slot::a, space) *
           embed(creation(space.n_b), Slot::b, space);
}

Operator zero_op(const SpaceDescriptor& space) {
    return Operator(Matrix::Zero(space.dim(), space.dim()), space);
}

Operator projector(Level l, const SpaceDescriptor& space) {
    return embed(qutrit_transition(l, l), Slot::qutrit, space);
}

} // namespace

TimeDependentHamiltonian::TimeDependentHamiltonian(Operator static_part_,
                                                   std::vector<RotatingTerm> terms_)
    : static_part(std::move(static_part_)), terms(std::move(terms_)) {
    if (!static_part.space)
        throw InputError("time-dependent Hamiltonian needs a full-space static part");
    for (const auto& t : terms)
        if (t.op.dim() != static_part.dim())
            throw InputError("rotating term dimension mismatch");
}

double TimeDependentHamiltonian::max_frequency() const {
    double f = 0.0;
    for (const auto& t : terms) f = std::max(f, std::abs(t.detuning));
    return f;
}

Operator TimeDependentHamiltonian::evaluate(double t) const {
    Matrix h = static_part.mat;
    for (const auto& term : terms) {
        const Complex z = term.amplitude * std::exp(Complex(0.0, term.detuning * t));
        h += z * term.op.mat + std::conj(z) * term.op.mat.adjoint();
    }
    return Operator(std::move(h), static_part.space);
}

TimeDependentHamiltonian stage1_ideal(const SystemParams& p, const DerivedParams& d,
                                      const SpaceDescriptor& space) {
    std::vector<RotatingTerm> terms;
    terms.push_back({p.g, d.delta_a, mode_raise(Slot::a, Level::g, Level::e, space)});
    terms.push_back({p.mu, d.delta_b, mode_raise(Slot::b, Level::e, Level::f, space)});
    return TimeDependentHamiltonian(zero_op(space), std::move(terms));
}

TimeDependentHamiltonian stage1_full(const SystemParams& p, const DerivedParams& d,
                                     const SpaceDescriptor& space) {
    std::vector<RotatingTerm> terms;
    terms.push_back({p.g, d.delta_a, mode_raise(Slot::a, Level::g, Level::e, space)});
    terms.push_back({p.mu, d.delta_b, mode_raise(Slot::b, Level::e, Level::f, space)});
    terms.push_back({d.g_p, d.delta_a_p, mode_raise(Slot::a, Level::e, Level::f, space)});
    terms.push_back({d.mu_p, d.delta_b_p, mode_raise(Slot::b, Level::g, Level::e, space)});
    terms.push_back(crosstalk_term_stage1(p, d, space));
    return TimeDependentHamiltonian(zero_op(space), std::move(terms));
}

TimeDependentHamiltonian stage2_ideal(const SystemParams& p, const DerivedParams& d,
                                      const SpaceDescriptor& space) {
    std::vector<RotatingTerm> terms;
    terms.push_back({d.g_t, d.delta_a_t, mode_raise(Slot::a, Level::g, Level::e, space)});
    return TimeDependentHamiltonian(zero_op(space), std::move(terms));
}

TimeDependentHamiltonian stage2_full(const SystemParams& p, const DerivedParams& d,
                                     const SpaceDescriptor& space) {
    std::vector<RotatingTerm> terms;
    terms.push_back({d.g_t, d.delta_a_t, mode_raise(Slot::a, Level::g, Level::e, space)});
    terms.push_back({d.g_tp, d.delta_a_tp, mode_raise(Slot::a, Level::e, Level::f, space)});
    terms.push_back(crosstalk_term_stage2(p, d, space));
    return TimeDependentHamiltonian(zero_op(space), std::move(terms));
}

TimeDependentHamiltonian effective_stage1(const SystemParams&, const DerivedParams& d,
                                          const SpaceDescriptor& space,
                                          bool include_e_f_levels) {
    const Operator n_a = embed(number_operator(space.n_a), Slot::a, space);
    const Operator n_b = embed(number_operator(space.n_b), Slot::b, space);
    const Operator p_g = projector(Level::g, space);

    Matrix h = -d.lambda_a * (n_a.mat * p_g.mat) - d.chi * (n_a.mat * n_b.mat * p_g.mat);
    if (include_e_f_levels) {
        const Operator p_e = projector(Level::e, space);
        const Operator p_f = projector(Level::f, space);
        // a a^dag = n_a + 1 and b b^dag = n_b + 1 on the truncated space.
        const Matrix aad = n_a.mat + Matrix::Identity(space.dim(), space.dim());
        const Matrix bbd = n_b.mat + Matrix::Identity(space.dim(), space.dim());
        h += d.lambda_a * (aad * p_e.mat);
        h += -d.lambda_b * (n_b.mat * p_e.mat) + d.lambda_b * (bbd * p_f.mat);
        h += d.chi * (aad * bbd * p_f.mat);
    }
    return TimeDependentHamiltonian(Operator(std::move(h), space), {});
}

TimeDependentHamiltonian effective_stage2(const SystemParams&, const DerivedParams& d,
                                          const SpaceDescriptor& space) {
    const Operator n_a = embed(number_operator(space.n_a), Slot::a, space);
    const Operator p_g = projector(Level::g, space);
    Matrix h = -d.lambda_a_t * (n_a.mat * p_g.mat);
    return TimeDependentHamiltonian(Operator(std::move(h), space), {});
}

RotatingTerm crosstalk_term_stage1(const SystemParams& p, const DerivedParams& d,
                                   const SpaceDescriptor& space) {
    return {p.g_ab, -d.Delta_ab, crosstalk_op(space)};
}

RotatingTerm crosstalk_term_stage2(const SystemParams& p, const DerivedParams& d,
                                   const SpaceDescriptor& space) {
    return {p.g_ab_t, -d.Delta_ab_t, crosstalk_op(space)};
}

} // namespace catgate
