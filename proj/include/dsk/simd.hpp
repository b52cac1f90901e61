#pragma once

#include <cstddef>

namespace dsk::simd {

// Vector kernels used by the dense-matrix inner loops. Every entry has a
// scalar reference implementation and (on x86-64 with AVX2+FMA) a
// vectorized variant. The two are equivalence-tested; reductions may
// differ in the last ulps because the SIMD variants reassociate sums and
// contract multiply-add. Callers must not depend on exact rounding.
struct Kernels {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x[i] *= alpha
  void (*scal)(double alpha, double* x, std::size_t n);
  // plane rotation: {x[i], y[i]} <- {c*x[i] - s*y[i], s*x[i] + c*y[i]}
  void (*rot)(double* x, double* y, double c, double s, std::size_t n);
  // sum_i (a[i]-b[i])^2
  double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
  // sum_i w[i]*a[i]*a[i]
  double (*weighted_sq_sum)(const double* a, const double* w, std::size_t n);
  const char* name;
};

const Kernels& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
const Kernels& avx2_kernels();
#endif

// Kernel set picked at startup: best variant the CPU supports, overridable
// with DSK_SIMD=scalar|avx2 (unknown or unsupported values fall back to
// scalar).
const Kernels& active();

}  // namespace dsk::simd
