#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "catgate/errors.hpp"

namespace catgate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Qutrit levels in the fixed basis order (g, e, f) = (0, 1, 2).
enum class Level { g = 0, e = 1, f = 2 };

/// Subsystem slots of the product space, in tensor order qutrit (x) a (x) b.
enum class Slot { qutrit, a, b };

/// Tensor-product space of one qutrit and two truncated bosonic modes.
/// Basis index = (q * n_a + i_a) * n_b + i_b, Fock indices ascending.
struct SpaceDescriptor {
    static constexpr int qutrit_dim = 3;

    SpaceDescriptor(int n_a, int n_b) : n_a(n_a), n_b(n_b) {
        if (n_a < 2 || n_b < 2)
            throw InputError("Fock truncations must be at least 2, got n_a=" +
                             std::to_string(n_a) + ", n_b=" + std::to_string(n_b));
    }

    int dim() const { return qutrit_dim * n_a * n_b; }
    int index(int q, int i_a, int i_b) const { return (q * n_a + i_a) * n_b + i_b; }
    int slot_dim(Slot s) const { return s == Slot::qutrit ? qutrit_dim : (s == Slot::a ? n_a : n_b); }

    bool operator==(const SpaceDescriptor&) const = default;

    int n_a;
    int n_b;
};

/// Dense complex operator. Operators on the full product space carry the
/// SpaceDescriptor they act on; single-subsystem operators carry none.
struct Operator {
    Operator() = default;
    explicit Operator(Matrix m, std::optional<SpaceDescriptor> space = std::nullopt)
        : mat(std::move(m)), space(std::move(space)) {
        if (mat.rows() != mat.cols())
            throw InputError("operator matrix must be square");
        if (this->space && this->space->dim() != mat.rows())
            throw InputError("operator dimension does not match its space");
    }

    int dim() const { return static_cast<int>(mat.rows()); }
    Operator adjoint() const { return Operator(mat.adjoint(), space); }

    /// Largest elementwise deviation from Hermiticity.
    double hermiticity_error() const { return (mat - mat.adjoint()).cwiseAbs().maxCoeff(); }
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_error() < tol; }

    Matrix mat;
    std::optional<SpaceDescriptor> space;
};

Operator operator*(const Operator& x, const Operator& y);
Operator operator+(const Operator& x, const Operator& y);
Operator operator*(Complex c, const Operator& x);

/// n x n identity (single subsystem, no space attached).
Operator identity(int n);

/// Bosonic annihilation operator on an n-level truncated Fock space:
/// A[k-1, k] = sqrt(k). Requires n >= 2.
Operator annihilation(int n);

/// Adjoint of annihilation(n).
Operator creation(int n);

/// Photon number operator a^dag a on an n-level truncated Fock space.
Operator number_operator(int n);

/// Qutrit transition operator |to><from| in the (g, e, f) basis.
/// A projector when from == to.
Operator qutrit_transition(Level from, Level to);

/// Kronecker-embeds a single-subsystem operator into the full product
/// space, acting as identity on the other two slots.
Operator embed(const Operator& op, Slot slot, const SpaceDescriptor& space);

/// Coefficient-weighted sum of operators on a common space.
Operator compose(const std::vector<std::pair<Complex, Operator>>& terms);

} // namespace catgate
