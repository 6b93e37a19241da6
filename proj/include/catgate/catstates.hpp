#pragma once

#include <complex>
#include <string>

#include "catgate/hilbert.hpp"

namespace catgate {

/// Pure state on either a single bosonic mode (no space attached) or the
/// full product space.
struct StateVector {
    StateVector() = default;
    explicit StateVector(Vector v, std::optional<SpaceDescriptor> space = std::nullopt)
        : amps(std::move(v)), space(std::move(space)) {
        if (this->space && this->space->dim() != amps.size())
            throw InputError("state dimension does not match its space");
    }

    int dim() const { return static_cast<int>(amps.size()); }
    double norm() const { return amps.norm(); }

    Vector amps;
    std::optional<SpaceDescriptor> space;
};

/// Cat-state qubit encoding: logical 0/1 are the even/odd cat states of a
/// single resonator with coherent amplitude alpha, truncated at n_trunc
/// Fock levels. Truncation quality is policed against tail_epsilon.
struct CatEncoding {
    CatEncoding(Complex alpha, int n_trunc, double tail_epsilon = 1e-9);

    Complex alpha;
    int n_trunc;
    double tail_epsilon;
    double norm_plus;   // 1/sqrt(2(1 + e^{-2|alpha|^2}))
    double norm_minus;  // 1/sqrt(2(1 - e^{-2|alpha|^2})), infinite at alpha = 0
};

/// Two-qubit product-state amplitudes parametrized by angles (theta, phi):
/// (cos t cos p, cos t sin p, sin t cos p, sin t sin p) on (00, 01, 10, 11).
struct InitialStateSpec {
    InitialStateSpec(double theta, double phi) : theta(theta), phi(phi) {}

    double amp00() const { return std::cos(theta) * std::cos(phi); }
    double amp01() const { return std::cos(theta) * std::sin(phi); }
    double amp10() const { return std::sin(theta) * std::cos(phi); }
    double amp11() const { return std::sin(theta) * std::sin(phi); }

    double theta;
    double phi;
};

enum class LogicalBits { b00 = 0, b01 = 1, b10 = 2, b11 = 3 };

const char* to_string(LogicalBits bits);

/// Even cat state, supported on even Fock levels only.
StateVector logical_zero(const CatEncoding& enc);

/// Odd cat state, supported on odd Fock levels only.
/// Throws ConstraintError for |alpha| < 1e-6 (encoding degenerates).
StateVector logical_one(const CatEncoding& enc);

/// Logical two-qubit basis state with the qutrit in |g>:
/// |g> (x) cat_a (x) cat_b on the given space.
StateVector two_qubit_logical(LogicalBits bits, const CatEncoding& enc,
                              const SpaceDescriptor& space);

/// Angle-parametrized superposition of the four logical states, qutrit in |g>.
StateVector input_superposition(const InitialStateSpec& spec, const CatEncoding& enc,
                                const SpaceDescriptor& space);

/// Same as input_superposition with the |11> amplitude negated: the exact
/// controlled-phase gate output.
StateVector ideal_output(const InitialStateSpec& spec, const CatEncoding& enc,
                         const SpaceDescriptor& space);

/// Worst-case population the encoding places beyond the truncation,
/// maximized over the two logical states. Computed from the closed-form
/// coefficients; exact 0 for alpha = 0.
double tail_population(const CatEncoding& enc);

/// Smallest truncation for which tail_population would fall below eps.
int required_truncation(Complex alpha, double eps);

} // namespace catgate
