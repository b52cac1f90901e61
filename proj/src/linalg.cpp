#include "dsk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dsk/errors.hpp"
#include "dsk/simd.hpp"

namespace dsk {

namespace {

// Householder reduction of the symmetric matrix held in `w` to tridiagonal
// form (diag, sub). When `refl`/`hcoef` are given the reflectors are saved
// so the orthogonal factor can be accumulated afterwards. Only the leading
// principal blocks of `w` are referenced as the reduction shrinks, so `w`
// may be used as scratch by the caller afterwards.
void tridiagonalize(Matrix& w, std::vector<double>& diag, std::vector<double>& sub,
                    Matrix* refl, std::vector<double>* hcoef) {
  const auto& k = simd::active();
  const int n = w.rows();
  diag.assign(n, 0.0);
  sub.assign(n, 0.0);
  if (hcoef != nullptr) hcoef->assign(n, 0.0);

  std::vector<double> vbuf;
  std::vector<double> p(n), q(n);

  for (int i = n - 1; i >= 1; --i) {
    double* v = refl != nullptr ? refl->row(i) : (vbuf.assign(n, 0.0), vbuf.data());
    double scale = 0.0;
    for (int j = 0; j < i; ++j) scale += std::fabs(w(i, j));
    if (i == 1 || scale == 0.0) {
      sub[i] = w(i, i - 1);
      continue;
    }
    for (int j = 0; j < i; ++j) v[j] = w(i, j) / scale;
    double h = k.dot(v, v, i);
    const double f = v[i - 1];
    const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
    sub[i] = scale * g;
    h -= f * g;  // now h = |v|^2 / 2 with the updated head component
    v[i - 1] = f - g;
    if (hcoef != nullptr) (*hcoef)[i] = h;

    for (int j = 0; j < i; ++j) p[j] = k.dot(w.row(j), v, i) / h;
    const double kk = k.dot(v, p.data(), i) / (2.0 * h);
    for (int j = 0; j < i; ++j) q[j] = p[j] - kk * v[j];
    for (int j = 0; j < i; ++j) {
      k.axpy(-v[j], q.data(), w.row(j), i);
      k.axpy(-q[j], v, w.row(j), i);
    }
  }
  for (int j = 0; j < n; ++j) diag[j] = w(j, j);
}

// Accumulate Q = P_{n-1} ... P_1 from the stored reflectors; A = Q T Q'.
Matrix accumulate_q(const Matrix& refl, const std::vector<double>& hcoef, int n) {
  const auto& k = simd::active();
  Matrix q = Matrix::identity(n);
  std::vector<double> s(n);
  for (int i = 1; i < n; ++i) {
    if (hcoef[i] == 0.0) continue;
    const double* v = refl.row(i);
    std::fill(s.begin(), s.begin() + i, 0.0);
    for (int r = 0; r < i; ++r) k.axpy(v[r], q.row(r), s.data(), i);
    k.scal(1.0 / hcoef[i], s.data(), i);
    for (int r = 0; r < i; ++r) k.axpy(-v[r], s.data(), q.row(r), i);
  }
  return q;
}

// Implicit-shift QL on the tridiagonal (diag, sub). sub[i] couples i-1 and
// i. When `vt` is non-null its rows are rotated along, turning Q' into the
// transposed eigenvector matrix.
void ql_implicit(std::vector<double>& diag, std::vector<double>& sub, Matrix* vt) {
  const auto& kern = simd::active();
  const int n = static_cast<int>(diag.size());
  if (n == 0) return;
  std::vector<double> e(n, 0.0);
  for (int i = 1; i < n; ++i) e[i - 1] = sub[i];

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(diag[m]) + std::fabs(diag[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) fail(ErrorCode::NonFinite, "QL eigensolver failed to converge");
        double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          if (vt != nullptr) kern.rot(vt->row(i), vt->row(i + 1), c, s, vt->cols());
        }
        if (r == 0.0 && i >= l) continue;
        diag[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void sort_descending(std::vector<double>& values, Matrix* vt) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  std::vector<double> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = values[order[i]];
  values = std::move(sorted);
  if (vt != nullptr) {
    Matrix permuted(n, vt->cols());
    for (int i = 0; i < n; ++i)
      std::copy(vt->row(order[i]), vt->row(order[i]) + vt->cols(), permuted.row(i));
    *vt = std::move(permuted);
  }
}

}  // namespace

void sym_eigenvalues_inplace(Matrix& w, std::vector<double>& values) {
  std::vector<double> sub;
  tridiagonalize(w, values, sub, nullptr, nullptr);
  ql_implicit(values, sub, nullptr);
  sort_descending(values, nullptr);
}

void sym_eigen_inplace(Matrix& w, std::vector<double>& values, Matrix& vectors_t) {
  const int n = w.rows();
  std::vector<double> sub, hcoef;
  Matrix refl(n, n);
  tridiagonalize(w, values, sub, &refl, &hcoef);
  vectors_t = transpose(accumulate_q(refl, hcoef, n));
  ql_implicit(values, sub, &vectors_t);
  sort_descending(values, &vectors_t);
}

std::vector<double> sym_eigenvalues(const Matrix& a) {
  Matrix w = a;
  std::vector<double> values;
  sym_eigenvalues_inplace(w, values);
  return values;
}

SymmetricEigen sym_eigen(const Matrix& a) {
  Matrix w = a;
  SymmetricEigen out;
  sym_eigen_inplace(w, out.values, out.vectors_t);
  return out;
}

Matrix cholesky_lower(const Matrix& a) {
  const auto& k = simd::active();
  const int n = a.rows();
  Matrix l(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double s = a(i, j) - k.dot(l.row(i), l.row(j), j);
      if (i == j) {
        if (s <= 0.0)
          fail(ErrorCode::NotPositiveDefinite, "Cholesky pivot non-positive");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const auto& kern = simd::active();
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int p = 0; p < a.cols(); ++p) {
      kern.axpy(a(i, p), b.row(p), c.row(i), b.cols());
    }
  }
  return c;
}

Matrix matmul_abt(const Matrix& a, const Matrix& b) {
  const auto& kern = simd::active();
  Matrix c(a.rows(), b.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.rows(); ++j) {
      c(i, j) = kern.dot(a.row(i), b.row(j), a.cols());
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix weighted_outer_sum(const std::vector<double>& w, const Matrix& vectors_t) {
  const auto& kern = simd::active();
  const int n = vectors_t.cols();
  Matrix out(n, n);
  for (int z = 0; z < static_cast<int>(w.size()); ++z) {
    const double* v = vectors_t.row(z);
    for (int i = 0; i < n; ++i) {
      kern.axpy(w[z] * v[i], v, out.row(i), n);
    }
  }
  return out;
}

double frobenius_sq_diff(const Matrix& a, const Matrix& b) {
  return simd::active().sum_sq_diff(a.data(), b.data(), a.size());
}

}  // namespace dsk
