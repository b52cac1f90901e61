#include <doctest.h>

#include <cmath>
#include <string>

#include "dsk/errors.hpp"
#include "dsk/linalg.hpp"
#include "support/test_util.hpp"

using dsk::Matrix;

namespace {

Matrix reconstruct(const dsk::SymmetricEigen& e) {
  return dsk::weighted_outer_sum(e.values, e.vectors_t);
}

double orthonormality_err(const Matrix& vt) {
  const Matrix gram = dsk::matmul_abt(vt, vt);
  return testutil::max_abs_diff(gram, Matrix::identity(vt.rows()));
}

}  // namespace

TEST_CASE("sym_eigen on diagonal matrices is exact") {
  Matrix a(3, 3);
  a(0, 0) = 2.0;
  a(1, 1) = -1.0;
  a(2, 2) = 5.0;
  const auto e = dsk::sym_eigen(a);
  CHECK(e.values[0] == doctest::Approx(5.0));
  CHECK(e.values[1] == doctest::Approx(2.0));
  CHECK(e.values[2] == doctest::Approx(-1.0));
  CHECK(orthonormality_err(e.vectors_t) < 1e-14);
  CHECK(testutil::max_abs_diff(reconstruct(e), a) < 1e-13);
}

TEST_CASE("sym_eigen handles a known 2x2") {
  // [[1,2],[2,1]] has eigenvalues 3 and -1
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 1;
  const auto e = dsk::sym_eigen(a);
  CHECK(e.values[0] == doctest::Approx(3.0));
  CHECK(e.values[1] == doctest::Approx(-1.0));
  CHECK(testutil::max_abs_diff(reconstruct(e), a) < 1e-14);
}

TEST_CASE("sym_eigen matches the Jacobi oracle on random symmetric matrices") {
  auto g = testutil::rng(7);
  for (int n : {1, 2, 3, 5, 8, 13, 21, 40}) {
    for (int rep = 0; rep < 8; ++rep) {
      CAPTURE(n);
      CAPTURE(rep);
      const Matrix a = testutil::random_symmetric(g, n);
      const auto mine = dsk::sym_eigen(a);
      const auto oracle = testutil::jacobi_eigen(a);
      REQUIRE(static_cast<int>(mine.values.size()) == n);
      for (int i = 0; i < n; ++i)
        CHECK(mine.values[i] == doctest::Approx(oracle.values[i]).epsilon(1e-10));
      CHECK(orthonormality_err(mine.vectors_t) < 1e-12);
      CHECK(testutil::max_abs_diff(reconstruct(mine), a) < 1e-11);
      // eigenvalues sorted descending
      for (int i = 1; i < n; ++i) CHECK(mine.values[i - 1] >= mine.values[i]);
    }
  }
}

TEST_CASE("values-only path agrees with the full decomposition") {
  auto g = testutil::rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix a = testutil::random_symmetric(g, 11);
    const auto vals = dsk::sym_eigenvalues(a);
    const auto full = dsk::sym_eigen(a);
    for (std::size_t i = 0; i < vals.size(); ++i)
      CHECK(vals[i] == doctest::Approx(full.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("sym_eigen on repeated eigenvalues") {
  // 4x4 with eigenvalue 2 (multiplicity 3) and 6
  auto g = testutil::rng(13);
  Matrix q = testutil::jacobi_eigen(testutil::random_symmetric(g, 4)).vectors_t;
  std::vector<double> lam{6.0, 2.0, 2.0, 2.0};
  const Matrix a = dsk::weighted_outer_sum(lam, q);
  const auto e = dsk::sym_eigen(a);
  CHECK(e.values[0] == doctest::Approx(6.0));
  for (int i = 1; i < 4; ++i) CHECK(e.values[i] == doctest::Approx(2.0));
  CHECK(orthonormality_err(e.vectors_t) < 1e-12);
  CHECK(testutil::max_abs_diff(reconstruct(e), a) < 1e-12);
}

TEST_CASE("cholesky factor reproduces the matrix") {
  auto g = testutil::rng(17);
  const Matrix a = testutil::random_spd_entries(g, 6);
  const Matrix l = dsk::cholesky_lower(a);
  CHECK(testutil::max_abs_diff(dsk::matmul_abt(l, l), a) < 1e-12);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) CHECK(l(i, j) == 0.0);
}

TEST_CASE("cholesky rejects indefinite input") {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 1;
  CHECK_THROWS_AS(dsk::cholesky_lower(a), dsk::Error);
}

TEST_CASE("matmul agrees with matmul_abt") {
  auto g = testutil::rng(23);
  const Matrix a = testutil::random_matrix(g, 4, 6);
  const Matrix b = testutil::random_matrix(g, 6, 5);
  const Matrix c1 = dsk::matmul(a, b);
  const Matrix c2 = dsk::matmul_abt(a, dsk::transpose(b));
  CHECK(testutil::max_abs_diff(c1, c2) < 1e-13);
}

TEST_CASE("weighted_outer_sum equals explicit triple product") {
  auto g = testutil::rng(29);
  const Matrix a = testutil::random_symmetric(g, 7);
  const auto e = dsk::sym_eigen(a);
  Matrix lam(7, 7);
  for (int i = 0; i < 7; ++i) lam(i, i) = e.values[i];
  const Matrix explicit_form =
      dsk::matmul(dsk::matmul(dsk::transpose(e.vectors_t), lam), e.vectors_t);
  CHECK(testutil::max_abs_diff(dsk::weighted_outer_sum(e.values, e.vectors_t),
                               explicit_form) < 1e-12);
}
