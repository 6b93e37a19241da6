#include "catgate/hilbert.hpp"

#include <cmath>

namespace catgate {

namespace {

void require_same_space(const Operator& x, const Operator& y, const char* what) {
    if (x.dim() != y.dim())
        throw InputError(std::string(what) + ": operator dimensions differ (" +
                         std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")");
    if (x.space && y.space && !(*x.space == *y.space))
        throw InputError(std::string(what) + ": operators live on different spaces");
}

std::optional<SpaceDescriptor> merged_space(const Operator& x, const Operator& y) {
    return x.space ? x.space : y.space;
}

} // namespace

Operator operator*(const Operator& x, const Operator& y) {
    require_same_space(x, y, "operator product");
    return Operator(x.mat * y.mat, merged_space(x, y));
}

Operator operator+(const Operator& x, const Operator& y) {
    require_same_space(x, y, "operator sum");
    return Operator(x.mat + y.mat, merged_space(x, y));
}

Operator operator*(Complex c, const Operator& x) { return Operator(c * x.mat, x.space); }

Operator identity(int n) { return Operator(Matrix::Identity(n, n)); }

Operator annihilation(int n) {
    if (n < 2)
        throw InputError("annihilation operator needs at least 2 Fock levels, got n=" +
                         std::to_string(n));
    Matrix m = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) m(k - 1, k) = std::sqrt(static_cast<double>(k));
    return Operator(std::move(m));
}

Operator creation(int n) { return annihilation(n).adjoint(); }

Operator number_operator(int n) {
    Matrix m = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
    return Operator(std::move(m));
}

Operator qutrit_transition(Level from, Level to) {
    Matrix m = Matrix::Zero(3, 3);
    m(static_cast<int>(to), static_cast<int>(from)) = 1.0;
    return Operator(std::move(m));
}

Operator embed(const Operator& op, Slot slot, const SpaceDescriptor& space) {
    if (op.dim() != space.slot_dim(slot))
        throw InputError("embed: operator dimension " + std::to_string(op.dim()) +
                         " does not match slot dimension " +
                         std::to_string(space.slot_dim(slot)));

    const int d = space.dim();
    Matrix out = Matrix::Zero(d, d);

    // Row/column index factorizes as (q * n_a + i_a) * n_b + i_b; the two
    // identity slots contribute Kronecker deltas.
    for (int q = 0; q < SpaceDescriptor::qutrit_dim; ++q)
        for (int ia = 0; ia < space.n_a; ++ia)
            for (int ib = 0; ib < space.n_b; ++ib) {
                const int r = space.index(q, ia, ib);
                switch (slot) {
                    case Slot::qutrit:
                        for (int q2 = 0; q2 < SpaceDescriptor::qutrit_dim; ++q2)
                            out(r, space.index(q2, ia, ib)) = op.mat(q, q2);
                        break;
                    case Slot::a:
                        for (int a2 = 0; a2 < space.n_a; ++a2)
                            out(r, space.index(q, a2, ib)) = op.mat(ia, a2);
                        break;
                    case Slot::b:
                        for (int b2 = 0; b2 < space.n_b; ++b2)
                            out(r, space.index(q, ia, b2)) = op.mat(ib, b2);
                        break;
                }
            }
    return Operator(std::move(out), space);
}

Operator compose(const std::vector<std::pair<Complex, Operator>>& terms) {
    if (terms.empty()) throw InputError("compose: empty term list");
    const Operator& first = terms.front().second;
    Matrix acc = Matrix::Zero(first.dim(), first.dim());
    std::optional<SpaceDescriptor> space;
    for (const auto& [coeff, op] : terms) {
        require_same_space(first, op, "compose");
        if (!space) space = op.space;
        if (space && op.space && !(*space == *op.space))
            throw InputError("compose: operators live on different spaces");
        acc += coeff * op.mat;
    }
    return Operator(std::move(acc), space);
}

} // namespace catgate
