#pragma once

#include "dsk/spd_matrix.hpp"

namespace dsk {

enum class MetricKind {
  Airm,
  Cholesky,
  Euclidean,
  LogEuclidean,
  PowerEuclidean,
  SDivergenceRoot,
};

struct MetricId {
  MetricKind kind = MetricKind::SDivergenceRoot;
  double power = 1.0;  // zeta, PowerEuclidean only; must be > 0

  static MetricId airm() { return {MetricKind::Airm, 1.0}; }
  static MetricId cholesky() { return {MetricKind::Cholesky, 1.0}; }
  static MetricId euclidean() { return {MetricKind::Euclidean, 1.0}; }
  static MetricId log_euclidean() { return {MetricKind::LogEuclidean, 1.0}; }
  static MetricId power_euclidean(double zeta) { return {MetricKind::PowerEuclidean, zeta}; }
  static MetricId s_divergence_root() { return {MetricKind::SDivergenceRoot, 1.0}; }
};

// S(X,Y) = log det((X+Y)/2) - 1/2 log det(XY), evaluated through the
// eigenvalues of the midpoint and the cached log-determinants. Symmetric,
// nonnegative, affine invariant.
double s_divergence(const SpdMatrix& x, const SpdMatrix& y);

// exp(-theta * S(X,Y)); Mercer for theta in {1/2, ..., (d-1)/2} and beyond
// (d-1)/2.
double stein_kernel(const SpdMatrix& x, const SpdMatrix& y, double theta);

double metric_distance(const MetricId& id, const SpdMatrix& x, const SpdMatrix& y);

// exp(-theta * distance^2). AIRM does not define a valid kernel and throws
// UnsupportedKernel.
double metric_kernel(const MetricId& id, const SpdMatrix& x, const SpdMatrix& y,
                     double theta);

const char* metric_name(MetricKind kind);

}  // namespace dsk
