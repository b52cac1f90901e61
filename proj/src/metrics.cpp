#include "dsk/metrics.hpp"

#include <cmath>

#include "dsk/errors.hpp"
#include "dsk/simd.hpp"

namespace dsk {

namespace {

void require_same_dim(const SpdMatrix& x, const SpdMatrix& y) {
  if (x.dim() != y.dim()) fail(ErrorCode::DimensionMismatch, "dimension mismatch");
}

Matrix map_eigenvalues(const SpdMatrix& x, double (*f)(double)) {
  std::vector<double> mapped(x.eigenvalues());
  for (double& v : mapped) v = f(v);
  return weighted_outer_sum(mapped, x.eigenvectors_t());
}

Matrix power_of(const SpdMatrix& x, double zeta) {
  std::vector<double> mapped(x.eigenvalues());
  for (double& v : mapped) v = std::pow(v, zeta);
  return weighted_outer_sum(mapped, x.eigenvectors_t());
}

}  // namespace

double s_divergence(const SpdMatrix& x, const SpdMatrix& y) {
  require_same_dim(x, y);
  const int n = x.dim();
  Matrix mid(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mid(i, j) = 0.5 * (x.entries()(i, j) + y.entries()(i, j));
  std::vector<double> mu;
  sym_eigenvalues_inplace(mid, mu);
  double log_det_mid = 0.0;
  for (double v : mu) log_det_mid += std::log(v);
  const double s = log_det_mid - 0.5 * (x.log_det() + y.log_det());
  return s > 0.0 ? s : 0.0;
}

double stein_kernel(const SpdMatrix& x, const SpdMatrix& y, double theta) {
  if (theta <= 0.0) fail(ErrorCode::InvalidArgument, "theta must be positive");
  return std::exp(-theta * s_divergence(x, y));
}

double metric_distance(const MetricId& id, const SpdMatrix& x, const SpdMatrix& y) {
  require_same_dim(x, y);
  switch (id.kind) {
    case MetricKind::Airm: {
      // ||log(X^{-1/2} Y X^{-1/2})||_F through the eigenvalues of the
      // (symmetric) inner product; they equal those of X^{-1} Y.
      std::vector<double> inv_sqrt(x.eigenvalues());
      for (double& v : inv_sqrt) v = 1.0 / std::sqrt(v);
      const Matrix xs = weighted_outer_sum(inv_sqrt, x.eigenvectors_t());
      Matrix m = matmul(matmul(xs, y.entries()), xs);
      std::vector<double> sigma;
      sym_eigenvalues_inplace(m, sigma);
      double s = 0.0;
      for (double v : sigma) {
        const double lg = std::log(v);
        s += lg * lg;
      }
      return std::sqrt(s);
    }
    case MetricKind::Cholesky: {
      const Matrix lx = cholesky_lower(x.entries());
      const Matrix ly = cholesky_lower(y.entries());
      return std::sqrt(frobenius_sq_diff(lx, ly));
    }
    case MetricKind::Euclidean:
      return std::sqrt(frobenius_sq_diff(x.entries(), y.entries()));
    case MetricKind::LogEuclidean: {
      const Matrix lx = map_eigenvalues(x, [](double v) { return std::log(v); });
      const Matrix ly = map_eigenvalues(y, [](double v) { return std::log(v); });
      return std::sqrt(frobenius_sq_diff(lx, ly));
    }
    case MetricKind::PowerEuclidean: {
      if (id.power <= 0.0) fail(ErrorCode::InvalidArgument, "zeta must be positive");
      const Matrix px = power_of(x, id.power);
      const Matrix py = power_of(y, id.power);
      return std::sqrt(frobenius_sq_diff(px, py)) / id.power;
    }
    case MetricKind::SDivergenceRoot:
      return std::sqrt(s_divergence(x, y));
  }
  fail(ErrorCode::InvalidArgument, "unknown metric");
}

double metric_kernel(const MetricId& id, const SpdMatrix& x, const SpdMatrix& y,
                     double theta) {
  if (id.kind == MetricKind::Airm)
    fail(ErrorCode::UnsupportedKernel, "AIRM does not define a valid kernel");
  if (theta <= 0.0) fail(ErrorCode::InvalidArgument, "theta must be positive");
  if (id.kind == MetricKind::SDivergenceRoot) return stein_kernel(x, y, theta);
  const double d = metric_distance(id, x, y);
  return std::exp(-theta * d * d);
}

const char* metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Airm: return "airm";
    case MetricKind::Cholesky: return "cholesky";
    case MetricKind::Euclidean: return "euclidean";
    case MetricKind::LogEuclidean: return "logeuclidean";
    case MetricKind::PowerEuclidean: return "powereuclidean";
    case MetricKind::SDivergenceRoot: return "stein";
  }
  return "unknown";
}

}  // namespace dsk
