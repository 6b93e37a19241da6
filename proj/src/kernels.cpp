#include "catgate/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace catgate::kernels {

namespace {

// std::complex<double> has array-of-double layout; the hot loops work on
// raw doubles so complex products compile to plain mul/add with no
// libgcc complex-division/NaN paths.
inline const double* dptr(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* dptr(Complex* p) { return reinterpret_cast<double*>(p); }

struct ScaledEntries {
    std::vector<int> src;   // gather index into a column
    std::vector<int> dst;   // scatter index into a column
    std::vector<double> re;
    std::vector<double> im;
};

// Entry values scaled by alpha, with gather/scatter indices swapped and
// values conjugated for the adjoint application.
void scale_entries(Complex alpha, const CompactOp& s, bool adjoint, ScaledEntries& w) {
    const int n = s.nnz();
    w.src.resize(n);
    w.dst.resize(n);
    w.re.resize(n);
    w.im.resize(n);
    for (int k = 0; k < n; ++k) {
        const Complex v = adjoint ? alpha * std::conj(s.val[k]) : alpha * s.val[k];
        w.src[k] = adjoint ? s.row[k] : s.col[k];
        w.dst[k] = adjoint ? s.col[k] : s.row[k];
        w.re[k] = v.real();
        w.im[k] = v.imag();
    }
}

thread_local ScaledEntries t_scaled;

inline void scatter_column(const ScaledEntries& w, const Complex* xc, Complex* yc) {
    const int n = static_cast<int>(w.src.size());
    const double* x = dptr(xc);
    double* y = dptr(yc);
    for (int k = 0; k < n; ++k) {
        const double xr = x[2 * w.src[k]];
        const double xi = x[2 * w.src[k] + 1];
        y[2 * w.dst[k]] += w.re[k] * xr - w.im[k] * xi;
        y[2 * w.dst[k] + 1] += w.re[k] * xi + w.im[k] * xr;
    }
}

} // namespace

CompactOp CompactOp::from_dense(const Matrix& m, double drop_tol) {
    if (m.rows() != m.cols()) throw InputError("compact operator must be square");
    CompactOp s;
    s.dim = static_cast<int>(m.rows());
    for (int r = 0; r < s.dim; ++r)
        for (int c = 0; c < s.dim; ++c)
            if (std::abs(m(r, c)) > drop_tol) {
                s.row.push_back(r);
                s.col.push_back(c);
                s.val.push_back(m(r, c));
            }

    // group entries by row (used by the generic sandwich second pass)
    std::vector<int> order(s.val.size());
    std::iota(order.begin(), order.end(), 0);
    int prev_row = -1;
    for (int e : order) {
        if (s.row[e] != prev_row) {
            s.group_row.push_back(s.row[e]);
            s.group_offset.push_back(static_cast<int>(s.group_entry.size()));
            prev_row = s.row[e];
        }
        s.group_entry.push_back(e);
    }
    s.group_offset.push_back(static_cast<int>(s.group_entry.size()));

    std::vector<int> per_row(s.dim, 0), per_col(s.dim, 0);
    s.monomial = true;
    for (size_t k = 0; k < s.val.size(); ++k) {
        if (++per_row[s.row[k]] > 1 || ++per_col[s.col[k]] > 1) {
            s.monomial = false;
            break;
        }
    }
    return s;
}

Matrix CompactOp::to_dense() const {
    Matrix m = Matrix::Zero(dim, dim);
    for (int k = 0; k < nnz(); ++k) m(row[k], col[k]) += val[k];
    return m;
}

namespace reference {

void apply_left(Complex alpha, const CompactOp& s, const Matrix& x, Matrix& y, bool adjoint) {
    const Matrix m = s.to_dense();
    y.noalias() += alpha * (adjoint ? Matrix(m.adjoint()) : m) * x;
}

void apply_vec(Complex alpha, const CompactOp& s, const Vector& x, Vector& y, bool adjoint) {
    const Matrix m = s.to_dense();
    y.noalias() += alpha * (adjoint ? Matrix(m.adjoint()) : m) * x;
}

void sandwich(double rate, const CompactOp& s, const Matrix& x, Matrix& y, Matrix& scratch) {
    const Matrix m = s.to_dense();
    scratch.noalias() = m * x;
    y.noalias() += rate * scratch * m.adjoint();
}

void add_adjoint(Matrix& y) { y = (y + y.adjoint()).eval(); }

} // namespace reference

namespace par {

void apply_left(Complex alpha, const CompactOp& s, const Matrix& x, Matrix& y, bool adjoint) {
    scale_entries(alpha, s, adjoint, t_scaled);
    const ScaledEntries& w = t_scaled;
    const int cols = static_cast<int>(x.cols());
    const int d = static_cast<int>(x.rows());
    const Complex* xp = x.data();
    Complex* yp = y.data();
#pragma omp parallel for schedule(static)
    for (int j = 0; j < cols; ++j) scatter_column(w, xp + j * d, yp + j * d);
}

void apply_vec(Complex alpha, const CompactOp& s, const Vector& x, Vector& y, bool adjoint) {
    scale_entries(alpha, s, adjoint, t_scaled);
    scatter_column(t_scaled, x.data(), y.data());
}

void sandwich(double rate, const CompactOp& s, const Matrix& x, Matrix& y, Matrix& scratch) {
    const int d = s.dim;
    if (s.monomial) {
        // y(r_i, r_j) += rate v_i conj(v_j) x(c_i, c_j): one scatter per
        // entry pair, no scratch. Threads own disjoint output columns r_j.
        const int n = s.nnz();
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n; ++j) {
            const Complex wj = rate * std::conj(s.val[j]);
            const double wr = wj.real(), wi = wj.imag();
            const double* xc = dptr(x.data() + s.col[j] * d);
            double* yc = dptr(y.data() + s.row[j] * d);
            for (int i = 0; i < n; ++i) {
                const double vr = s.val[i].real() * wr - s.val[i].imag() * wi;
                const double vi = s.val[i].real() * wi + s.val[i].imag() * wr;
                const double xr = xc[2 * s.col[i]];
                const double xi = xc[2 * s.col[i] + 1];
                yc[2 * s.row[i]] += vr * xr - vi * xi;
                yc[2 * s.row[i] + 1] += vr * xi + vi * xr;
            }
        }
        return;
    }

    // generic two-pass: scratch = S x, then y += rate scratch S^dag.
    scratch.setZero();
    apply_left(1.0, s, x, scratch);
    const int ngroups = static_cast<int>(s.group_row.size());
#pragma omp parallel for schedule(static)
    for (int gi = 0; gi < ngroups; ++gi) {
        double* yc = dptr(y.data() + s.group_row[gi] * d);
        for (int k = s.group_offset[gi]; k < s.group_offset[gi + 1]; ++k) {
            const int e = s.group_entry[k];
            const Complex w = rate * std::conj(s.val[e]);
            const double wr = w.real(), wi = w.imag();
            const double* tc = dptr(scratch.data() + s.col[e] * d);
            for (int r = 0; r < d; ++r) {
                const double tr = tc[2 * r], ti = tc[2 * r + 1];
                yc[2 * r] += wr * tr - wi * ti;
                yc[2 * r + 1] += wr * ti + wi * tr;
            }
        }
    }
}

void add_adjoint(Matrix& y) {
    const int d = static_cast<int>(y.rows());
    constexpr int tile = 48;
    const int nt = (d + tile - 1) / tile;
    // tile pairs (bi, bj) with bi <= bj touch only blocks (bi,bj)/(bj,bi),
    // so parallel tiles never write the same element
    const int npairs = nt * (nt + 1) / 2;
#pragma omp parallel for schedule(static)
    for (int p = 0; p < npairs; ++p) {
        int bi = 0, rem = p;
        while (rem >= nt - bi) {
            rem -= nt - bi;
            ++bi;
        }
        const int bj = bi + rem;
        const int r0 = bi * tile, r1 = std::min(d, r0 + tile);
        const int c0 = bj * tile, c1 = std::min(d, c0 + tile);
        for (int c = c0; c < c1; ++c)
            for (int r = r0; r < std::min(r1, c); ++r) {
                const Complex t = y(r, c) + std::conj(y(c, r));
                y(r, c) = t;
                y(c, r) = std::conj(t);
            }
        if (bi == bj)
            for (int r = r0; r < r1; ++r) y(r, r) = 2.0 * y(r, r).real();
    }
}

} // namespace par

} // namespace catgate::kernels
