#pragma once

#include <vector>

#include "catgate/hilbert.hpp"

namespace catgate::kernels {

/// Coordinate-form view of an operator for the propagation inner loops.
/// Entries are sorted by (row, col). Most physical operators here are
/// monomial (at most one entry per row and per column: ladder operators,
/// qutrit transitions, projectors), which the parallel kernels exploit.
struct CompactOp {
    int dim = 0;
    std::vector<int> row;
    std::vector<int> col;
    std::vector<Complex> val;

    // entries regrouped by row, for the right-adjoint pass: groups[r] lists
    // entry indices with row == r (only non-empty rows are stored)
    std::vector<int> group_offset;
    std::vector<int> group_row;
    std::vector<int> group_entry;

    bool monomial = false;

    int nnz() const { return static_cast<int>(val.size()); }

    static CompactOp from_dense(const Matrix& m, double drop_tol = 0.0);
    Matrix to_dense() const;
};

/// Serial reference kernels: straightforward dense algebra, kept as the
/// correctness baseline for the structure-aware parallel kernels.
namespace reference {

/// Y += alpha * S * X  (or alpha * S^dag * X with adjoint = true)
void apply_left(Complex alpha, const CompactOp& s, const Matrix& x, Matrix& y,
                bool adjoint = false);

/// y += alpha * S * x on vectors.
void apply_vec(Complex alpha, const CompactOp& s, const Vector& x, Vector& y,
               bool adjoint = false);

/// Y += rate * S * X * S^dag
void sandwich(double rate, const CompactOp& s, const Matrix& x, Matrix& y, Matrix& scratch);

/// Y := Y + Y^dag
void add_adjoint(Matrix& y);

} // namespace reference

/// OpenMP-parallel, sparsity-aware kernels. Deterministic for any thread
/// count: each output column is owned by exactly one thread and accumulated
/// in a fixed order.
namespace par {

void apply_left(Complex alpha, const CompactOp& s, const Matrix& x, Matrix& y,
                bool adjoint = false);

void apply_vec(Complex alpha, const CompactOp& s, const Vector& x, Vector& y,
               bool adjoint = false);

void sandwich(double rate, const CompactOp& s, const Matrix& x, Matrix& y, Matrix& scratch);

void add_adjoint(Matrix& y);

} // namespace par

enum class Backend { reference, openmp };

} // namespace catgate::kernels
