#include "catgate/catstates.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace catgate {

namespace {

constexpr double kDegenerateAlpha = 1e-6;

// |C_k|^2 / (2 M)^2 = e^{-|a|^2} |a|^{2k} / k!, the Poisson weight. Evaluated
// iteratively so large k never overflows.
std::vector<double> poisson_weights(double alpha_sq, int count) {
    std::vector<double> w(count);
    double t = std::exp(-alpha_sq);
    for (int k = 0; k < count; ++k) {
        w[k] = t;
        t *= alpha_sq / (k + 1);
    }
    return w;
}

double tail_for_parity(const CatEncoding& enc, int parity) {
    const double a2 = std::norm(enc.alpha);
    if (a2 == 0.0) return 0.0;
    const double m = parity == 0 ? enc.norm_plus : enc.norm_minus;
    // Sum until terms vanish relative to double precision.
    const int kmax = enc.n_trunc + 64 + static_cast<int>(8 * a2);
    auto w = poisson_weights(a2, kmax);
    double tail = 0.0;
    int k0 = enc.n_trunc + ((enc.n_trunc % 2 == parity) ? 0 : 1);
    for (int k = k0; k < kmax; k += 2) tail += w[k];
    return 4.0 * m * m * tail;
}

StateVector cat_state(const CatEncoding& enc, int parity) {
    const double tail = tail_for_parity(enc, parity);
    if (tail >= enc.tail_epsilon)
        throw TruncationError("cat state tail population " + std::to_string(tail) +
                                  " exceeds budget " + std::to_string(enc.tail_epsilon),
                              required_truncation(enc.alpha, enc.tail_epsilon));

    Vector v = Vector::Zero(enc.n_trunc);
    const double m = parity == 0 ? enc.norm_plus : enc.norm_minus;
    // c_{k+2} = c_k * alpha^2 / sqrt((k+1)(k+2)), seeded at k = parity.
    Complex c = 2.0 * m * std::exp(-std::norm(enc.alpha) / 2.0);
    if (parity == 1) c *= enc.alpha;
    for (int k = parity; k < enc.n_trunc; k += 2) {
        v[k] = c;
        c *= enc.alpha * enc.alpha / std::sqrt(double(k + 1) * double(k + 2));
    }
    return StateVector(std::move(v));
}

} // namespace

CatEncoding::CatEncoding(Complex alpha, int n_trunc, double tail_epsilon)
    : alpha(alpha), n_trunc(n_trunc), tail_epsilon(tail_epsilon) {
    if (n_trunc < 2) throw InputError("cat encoding needs n_trunc >= 2");
    if (tail_epsilon <= 0) throw InputError("tail budget must be positive");
    const double e = std::exp(-2.0 * std::norm(alpha));
    norm_plus = 1.0 / std::sqrt(2.0 * (1.0 + e));
    norm_minus = std::abs(alpha) < kDegenerateAlpha
                     ? std::numeric_limits<double>::infinity()
                     : 1.0 / std::sqrt(2.0 * (1.0 - e));
}

const char* to_string(LogicalBits bits) {
    switch (bits) {
        case LogicalBits::b00: return "00";
        case LogicalBits::b01: return "01";
        case LogicalBits::b10: return "10";
        case LogicalBits::b11: return "11";
    }
    return "??";
}

StateVector logical_zero(const CatEncoding& enc) { return cat_state(enc, 0); }

StateVector logical_one(const CatEncoding& enc) {
    if (std::abs(enc.alpha) < kDegenerateAlpha)
        throw ConstraintError("odd cat state is numerically null for |alpha| < 1e-6");
    return cat_state(enc, 1);
}

StateVector two_qubit_logical(LogicalBits bits, const CatEncoding& enc,
                              const SpaceDescriptor& space) {
    if (space.n_a < enc.n_trunc || space.n_b < enc.n_trunc)
        throw InputError("space truncation smaller than cat encoding truncation");

    const int b = static_cast<int>(bits);
    const StateVector cat_a = (b & 2) ? logical_one(enc) : logical_zero(enc);
    const StateVector cat_b = (b & 1) ? logical_one(enc) : logical_zero(enc);

    Vector v = Vector::Zero(space.dim());
    const int q_g = static_cast<int>(Level::g);
    for (int ia = 0; ia < enc.n_trunc; ++ia)
        for (int ib = 0; ib < enc.n_trunc; ++ib)
            v[space.index(q_g, ia, ib)] = cat_a.amps[ia] * cat_b.amps[ib];
    return StateVector(std::move(v), space);
}

StateVector input_superposition(const InitialStateSpec& spec, const CatEncoding& enc,
                                const SpaceDescriptor& space) {
    Vector v = spec.amp00() * two_qubit_logical(LogicalBits::b00, enc, space).amps +
               spec.amp01() * two_qubit_logical(LogicalBits::b01, enc, space).amps +
               spec.amp10() * two_qubit_logical(LogicalBits::b10, enc, space).amps +
               spec.amp11() * two_qubit_logical(LogicalBits::b11, enc, space).amps;
    return StateVector(std::move(v), space);
}

StateVector ideal_output(const InitialStateSpec& spec, const CatEncoding& enc,
                         const SpaceDescriptor& space) {
    StateVector out = input_superposition(spec, enc, space);
    out.amps -= 2.0 * spec.amp11() * two_qubit_logical(LogicalBits::b11, enc, space).amps;
    return out;
}

double tail_population(const CatEncoding& enc) {
    if (std::abs(enc.alpha) < kDegenerateAlpha) return tail_for_parity(enc, 0);
    return std::max(tail_for_parity(enc, 0), tail_for_parity(enc, 1));
}

int required_truncation(Complex alpha, double eps) {
    for (int n = 2; n < 4096; ++n) {
        CatEncoding probe(alpha, n, 1.0);  // unit budget: never throws
        if (tail_population(probe) < eps) return n;
    }
    throw InputError("no feasible truncation below 4096 levels");
}

} // namespace catgate
