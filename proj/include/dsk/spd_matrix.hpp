#pragma once

#include <utility>
#include <vector>

#include "dsk/linalg.hpp"
#include "dsk/matrix.hpp"

namespace dsk {

// Dense symmetric positive definite matrix with its eigendecomposition
// computed once at construction and cached. Immutable afterwards, safe to
// share across threads.
class SpdMatrix {
 public:
  // Validates symmetry (|a_ij - a_ji| <= 1e-10 * max(1, |a_ij|)), then
  // symmetrizes and eigendecomposes. Throws NotSymmetric /
  // NotPositiveDefinite. The positivity floor rejects
  // lambda_min <= 1e-12 * max(1, lambda_max).
  static SpdMatrix from_entries(const Matrix& entries);

  // Builds the matrix from an eigensystem that is already orthonormal
  // (e.g. an eigenvalue adjustment of an existing SpdMatrix). Pairs are
  // re-sorted descending; positivity is still enforced.
  static SpdMatrix from_eigen(SymmetricEigen eigen);

  int dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  // Descending.
  const std::vector<double>& eigenvalues() const { return eigen_.values; }
  // Row z pairs with eigenvalues()[z].
  const Matrix& eigenvectors_t() const { return eigen_.vectors_t; }
  double log_det() const { return log_det_; }

 private:
  SpdMatrix(Matrix entries, SymmetricEigen eigen);

  Matrix entries_;
  SymmetricEigen eigen_;
  double log_det_ = 0.0;
};

constexpr double kSymmetryTol = 1e-10;
constexpr double kPositivityFloor = 1e-12;

}  // namespace dsk
