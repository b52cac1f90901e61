#pragma once

#include <vector>

#include "dsk/matrix.hpp"

namespace dsk {

// Eigendecomposition of a symmetric matrix. Eigenvalues are sorted
// descending; row z of vectors_t is the unit eigenvector paired with
// values[z], so A = vectors_t' * diag(values) * vectors_t.
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors_t;
};

// Householder tridiagonalization followed by implicit-shift QL. The
// in-place variants destroy `w` and reuse caller buffers; the hot pairwise
// loops call them with per-thread scratch.
void sym_eigenvalues_inplace(Matrix& w, std::vector<double>& values);
void sym_eigen_inplace(Matrix& w, std::vector<double>& values, Matrix& vectors_t);

std::vector<double> sym_eigenvalues(const Matrix& a);
SymmetricEigen sym_eigen(const Matrix& a);

// Lower-triangular Cholesky factor; throws NotPositiveDefinite when a
// pivot is non-positive.
Matrix cholesky_lower(const Matrix& a);

Matrix matmul(const Matrix& a, const Matrix& b);
// a * b' — row-against-row dot products, the layout both operands are
// stored in here.
Matrix matmul_abt(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

// sum_z w[z] * v_z v_z' with v_z = row z of vectors_t.
Matrix weighted_outer_sum(const std::vector<double>& w, const Matrix& vectors_t);

double frobenius_sq_diff(const Matrix& a, const Matrix& b);

}  // namespace dsk
