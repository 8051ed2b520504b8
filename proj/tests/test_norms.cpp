#include <catch_amalgamated.hpp>

#include "normpar/generators.hpp"
#include "normpar/norms.hpp"
#include "normpar/oracle.hpp"

using namespace normpar;

namespace {
const Tolerance kTol;
}

TEST_CASE("norm values") {
  const Vector x = Vector::from_reals({2, -1, 0});
  CHECK(norm(x, NormSpec::l1()) == 3.0);
  CHECK(norm(x, NormSpec::linf()) == 2.0);
  CHECK_THAT(norm(Vector::from_reals({3, 4}), NormSpec::lp(2)),
             Catch::Matchers::WithinAbs(5.0, 1e-12));
}

TEST_CASE("lp spec rejects boundary exponents") {
  CHECK_THROWS_AS(NormSpec::lp(1.0), std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::lp(0.5), std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::lp(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_NOTHROW(NormSpec::lp(1.0 + 1e-6));
}

TEST_CASE("peak sets") {
  const auto p1 = peak_set(Vector::from_reals({1, 0.5}), kTol);
  CHECK(p1.indices == std::vector<std::size_t>{0});
  CHECK(p1.value == 1.0);

  const auto p2 = peak_set(Vector::from_reals({1, -1, 0.3}), kTol);
  CHECK(p2.indices == std::vector<std::size_t>{0, 1});

  const auto p3 = peak_set(Vector::from_reals({1, 1 - 1e-12}), kTol);
  CHECK(p3.indices == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(peak_set(Vector::zero(3, Field::Real), kTol), ZeroVectorError);
}

TEST_CASE("norm properties on sampled vectors") {
  SplitMix64 rng(101);
  const std::vector<NormSpec> specs{NormSpec::l1(), NormSpec::linf(), NormSpec::lp(2),
                                    NormSpec::lp(3.5)};
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(7);
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const Vector x = random_vector(rng, n, f);
    const Vector y = random_vector(rng, n, f);
    for (const auto& spec : specs) {
      // homogeneity
      const Cx alpha = rng.uniform(-5, 5) * (f == Field::Real ? Cx(1, 0) : rng.unit_phase());
      CHECK(approx_eq(norm(x.scaled(alpha), spec), std::abs(alpha) * norm(x, spec), kTol));
      // triangle inequality
      const double scale = norm(x, spec) + norm(y, spec);
      CHECK(norm(x + y, spec) <= scale + kTol.eps_eq * std::max(1.0, scale));
    }
    // monotonicity across p
    CHECK(norm(x, NormSpec::l1()) >= norm(x, NormSpec::lp(2)) - 1e-12);
    CHECK(norm(x, NormSpec::lp(2)) >= norm(x, NormSpec::lp(3.5)) - 1e-12);
    CHECK(norm(x, NormSpec::lp(3.5)) >= norm(x, NormSpec::linf()) - 1e-12);
  }
}

TEST_CASE("peak set maps through generalized permutations") {
  SplitMix64 rng(55);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.below(5);
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const Vector x = random_vector(rng, n, f);
    const auto gp = gen_matrix(MatrixFamily::GenPerm, n, f, rng.next());
    // sigma(j) = the row where column j holds its nonzero entry
    std::vector<std::size_t> sigma(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (gp(r, c) != Cx(0, 0)) sigma[c] = r;

    const auto before = peak_set(x, kTol);
    const auto after = peak_set(gp.apply(x), kTol);
    std::vector<std::size_t> mapped;
    for (std::size_t k : before.indices) mapped.push_back(sigma[k]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(after.indices == mapped);
  }
}
