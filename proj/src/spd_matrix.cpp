#include "dsk/spd_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dsk/errors.hpp"

namespace dsk {

SpdMatrix::SpdMatrix(Matrix entries, SymmetricEigen eigen)
    : entries_(std::move(entries)), eigen_(std::move(eigen)) {
  log_det_ = 0.0;
  for (double v : eigen_.values) log_det_ += std::log(v);
}

SpdMatrix SpdMatrix::from_entries(const Matrix& entries) {
  if (entries.rows() != entries.cols())
    fail(ErrorCode::InvalidArgument, "matrix is not square");
  const int n = entries.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap = std::fabs(entries(i, j) - entries(j, i));
      if (gap > kSymmetryTol * std::max(1.0, std::fabs(entries(i, j))))
        fail(ErrorCode::NotSymmetric,
             "asymmetry above tolerance at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
    }
  }
  Matrix sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (entries(i, j) + entries(j, i));

  SymmetricEigen eigen = sym_eigen(sym);
  const double floor = kPositivityFloor * std::max(1.0, eigen.values.front());
  if (eigen.values.back() <= floor)
    fail(ErrorCode::NotPositiveDefinite,
         "min eigenvalue " + std::to_string(eigen.values.back()) +
             " at or below positivity floor");
  return SpdMatrix(std::move(sym), std::move(eigen));
}

SpdMatrix SpdMatrix::from_eigen(SymmetricEigen eigen) {
  const int n = static_cast<int>(eigen.values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eigen.values[a] > eigen.values[b]; });
  SymmetricEigen sorted;
  sorted.values.resize(n);
  sorted.vectors_t = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    sorted.values[i] = eigen.values[order[i]];
    std::copy(eigen.vectors_t.row(order[i]), eigen.vectors_t.row(order[i]) + n,
              sorted.vectors_t.row(i));
  }
  const double floor = kPositivityFloor * std::max(1.0, sorted.values.front());
  if (sorted.values.back() <= floor)
    fail(ErrorCode::NotPositiveDefinite,
         "adjusted eigenvalues not positive definite");
  Matrix entries = weighted_outer_sum(sorted.values, sorted.vectors_t);
  // weighted_outer_sum is symmetric only up to rounding; pin it exactly.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (entries(i, j) + entries(j, i));
      entries(i, j) = v;
      entries(j, i) = v;
    }
  return SpdMatrix(std::move(entries), std::move(sorted));
}

}  // namespace dsk
