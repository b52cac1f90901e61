#include <doctest.h>

#include <cmath>
#include <vector>

#include "dsk/simd.hpp"
#include "support/test_util.hpp"

using dsk::simd::Kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64& g, std::size_t n) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(g);
  return v;
}

void check_pair(const Kernels& a, const Kernels& b, std::size_t n, std::mt19937_64& g) {
  auto x = random_vec(g, n);
  auto y = random_vec(g, n);
  auto w = random_vec(g, n);
  for (auto& v : w) v = std::fabs(v) + 0.1;

  const double rel = 1e-12;
  CHECK(a.dot(x.data(), y.data(), n) ==
        doctest::Approx(b.dot(x.data(), y.data(), n)).epsilon(rel));
  CHECK(a.sum_sq_diff(x.data(), y.data(), n) ==
        doctest::Approx(b.sum_sq_diff(x.data(), y.data(), n)).epsilon(rel));
  CHECK(a.weighted_sq_sum(x.data(), w.data(), n) ==
        doctest::Approx(b.weighted_sq_sum(x.data(), w.data(), n)).epsilon(rel));

  auto ya = y, yb = y;
  a.axpy(0.7, x.data(), ya.data(), n);
  b.axpy(0.7, x.data(), yb.data(), n);
  for (std::size_t i = 0; i < n; ++i) CHECK(ya[i] == doctest::Approx(yb[i]).epsilon(rel));

  auto xa = x, xb = x;
  a.scal(-1.3, xa.data(), n);
  b.scal(-1.3, xb.data(), n);
  for (std::size_t i = 0; i < n; ++i) CHECK(xa[i] == doctest::Approx(xb[i]).epsilon(rel));

  auto rxa = x, rya = y, rxb = x, ryb = y;
  const double c = std::cos(0.6), s = std::sin(0.6);
  a.rot(rxa.data(), rya.data(), c, s, n);
  b.rot(rxb.data(), ryb.data(), c, s, n);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(rxa[i] == doctest::Approx(rxb[i]).epsilon(rel));
    CHECK(rya[i] == doctest::Approx(ryb[i]).epsilon(rel));
  }
}

}  // namespace

TEST_CASE("scalar kernels basic values") {
  const auto& k = dsk::simd::scalar_kernels();
  std::vector<double> a{1, 2, 3}, b{4, 5, 6};
  CHECK(k.dot(a.data(), b.data(), 3) == doctest::Approx(32.0));
  CHECK(k.sum_sq_diff(a.data(), b.data(), 3) == doctest::Approx(27.0));
  std::vector<double> w{2, 1, 0.5};
  CHECK(k.weighted_sq_sum(a.data(), w.data(), 3) == doctest::Approx(2 + 4 + 4.5));
  k.axpy(2.0, a.data(), b.data(), 3);
  CHECK(b[0] == 6.0);
  CHECK(b[2] == 12.0);
}

TEST_CASE("rot applies an orthogonal plane rotation") {
  const auto& k = dsk::simd::active();
  auto g = testutil::rng(11);
  std::vector<double> x = random_vec(g, 17), y = random_vec(g, 17);
  const double n_before =
      k.dot(x.data(), x.data(), 17) + k.dot(y.data(), y.data(), 17);
  k.rot(x.data(), y.data(), std::cos(1.1), std::sin(1.1), 17);
  const double n_after =
      k.dot(x.data(), x.data(), 17) + k.dot(y.data(), y.data(), 17);
  CHECK(n_after == doctest::Approx(n_before).epsilon(1e-13));
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernels agree with scalar reference") {
  if (!dsk::simd::avx2_supported()) return;
  const auto& scalar = dsk::simd::scalar_kernels();
  const auto& avx2 = dsk::simd::avx2_kernels();
  auto g = testutil::rng(42);
  // cover remainder tails on both sides of the vector width
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 100u, 257u}) {
    CAPTURE(n);
    check_pair(scalar, avx2, n, g);
  }
}
#endif

TEST_CASE("active kernel set is scalar or a supported variant") {
  const auto& k = dsk::simd::active();
  CHECK((std::string(k.name) == "scalar" || std::string(k.name) == "avx2"));
}
