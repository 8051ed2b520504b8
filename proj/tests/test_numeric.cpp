#include <catch_amalgamated.hpp>

#include "normpar/generators.hpp"
#include "normpar/numeric.hpp"
#include "normpar/rng.hpp"

using namespace normpar;

namespace {
const Tolerance kTol;
}

TEST_CASE("approx_eq on scalars") {
  CHECK(approx_eq(Scalar::real(1.0), Scalar::real(1.0), kTol));
  CHECK(approx_eq(Scalar::real(1.0), Scalar::real(1.0 + 1e-12), kTol));
  CHECK_FALSE(approx_eq(Scalar::real(1.0), Scalar::real(1.01), kTol));
  CHECK_THROWS_AS(approx_eq(Scalar::real(1.0), Scalar::complex(1.0, 0.0), kTol),
                  FieldMismatchError);
}

TEST_CASE("approx_eq is reflexive and symmetric on sampled scalars") {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Cx a(rng.uniform(-10, 10), rng.uniform(-10, 10));
    const Cx b = a + Cx(rng.uniform(-1e-8, 1e-8), rng.uniform(-1e-8, 1e-8));
    CHECK(approx_eq(a, a, kTol));
    CHECK(approx_eq(a, b, kTol) == approx_eq(b, a, kTol));
  }
}

TEST_CASE("is_nonneg_real") {
  CHECK(is_nonneg_real(Scalar::real(2.0), kTol));
  CHECK_FALSE(is_nonneg_real(Scalar::real(-1.0), kTol));
  CHECK(is_nonneg_real(Scalar::real(0.0), kTol));
  CHECK_FALSE(is_nonneg_real(Scalar::complex(1.0, 0.5), kTol));
  CHECK(is_nonneg_real(Scalar::complex(1.0, 1e-12), kTol));
}

TEST_CASE("real-tagged values reject nonzero imaginary parts") {
  CHECK_THROWS_AS(Scalar(Cx(1.0, 0.5), Field::Real), FieldMismatchError);
  CHECK_THROWS_AS(Vector({Cx(1, 0), Cx(0, 1)}, Field::Real), FieldMismatchError);
  CHECK_NOTHROW(Vector({Cx(1, 0), Cx(0, 1)}, Field::Complex));
}

TEST_CASE("tolerance bounds") {
  CHECK_THROWS_AS(Tolerance(0.0, 1e-9, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(1e-2), std::invalid_argument);
  CHECK_NOTHROW(Tolerance(1e-6));
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix::identity(3, Field::Real), kTol) == 3);
  // v u^t with u = (1,2), v = (3,4)
  const Matrix outer = Matrix::from_reals({{3, 6}, {4, 8}});
  CHECK(rank(outer, kTol) == 1);
  CHECK(rank(Matrix::zero(4, Field::Real), kTol) == 0);
}

TEST_CASE("rank is invariant under permutation equivalence") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const auto fam = trial % 2 == 0 ? MatrixFamily::Dense : MatrixFamily::RankOne;
    const Matrix t = gen_matrix(fam, n, f, rng.next());
    const Matrix p = gen_matrix(MatrixFamily::GenPerm, n, f, rng.next());
    const Matrix q = gen_matrix(MatrixFamily::GenPerm, n, f, rng.next());
    CHECK(rank(p * t * q, kTol) == rank(t, kTol));
  }
}

TEST_CASE("full rank iff elimination accepts n pivots") {
  // random invertible products of triangular factors with unit-scale diagonals
  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    Matrix lo = Matrix::identity(n, Field::Real), up = Matrix::identity(n, Field::Real);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lo.set(i, j, Cx(rng.uniform(-2, 2), 0));
        up.set(j, i, Cx(rng.uniform(-2, 2), 0));
      }
    CHECK(rank(lo * up, kTol) == n);
  }
}
