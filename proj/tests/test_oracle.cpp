#include <catch_amalgamated.hpp>

#include "normpar/generators.hpp"
#include "normpar/oracle.hpp"

using namespace normpar;

namespace {
const Tolerance kTol;
}

TEST_CASE("sampled pairs satisfy criterion and definition") {
  const std::vector<NormSpec> specs{NormSpec::l1(), NormSpec::linf(), NormSpec::lp(2),
                                    NormSpec::lp(3)};
  for (Field f : {Field::Real, Field::Complex})
    for (const auto& spec : specs)
      for (auto kind : {PairKind::Parallel, PairKind::TEA}) {
        SampleConfig cfg;
        cfg.seed = 404;
        cfg.count = 200;
        cfg.dim = 5;
        cfg.field = f;
        cfg.spec = spec;
        cfg.kind = kind;
        for (int i = 0; i < cfg.count; ++i) {
          const auto [x, y] = sample_pair(cfg, i);
          REQUIRE(is_pair(x, y, kind, spec, kTol).holds);
          REQUIRE(definitional_check(x, y, kind, spec, kTol));
        }
      }
}

TEST_CASE("sample streams are deterministic") {
  SampleConfig cfg;
  cfg.seed = 99;
  cfg.count = 50;
  cfg.dim = 4;
  cfg.field = Field::Complex;
  cfg.spec = NormSpec::linf();
  cfg.kind = PairKind::Parallel;
  for (int i = 0; i < cfg.count; ++i) {
    const auto a = sample_pair(cfg, i);
    const auto b = sample_pair(cfg, i);
    CHECK(a.first.entries() == b.first.entries());
    CHECK(a.second.entries() == b.second.entries());
  }
  CHECK_THROWS_AS(sample_pair(cfg, cfg.count), std::out_of_range);
}

TEST_CASE("empirical check refutes and clears") {
  SampleConfig cfg;
  cfg.seed = 7;
  cfg.count = 10000;
  cfg.dim = 2;
  cfg.field = Field::Real;
  cfg.spec = NormSpec::l1();
  cfg.kind = PairKind::TEA;

  CHECK_FALSE(empirical_check(Matrix::identity(2, Field::Real), cfg, kTol)
                  .counterexample.has_value());

  const auto found = empirical_check(Matrix::from_reals({{1, 1}, {0, 1}}), cfg, kTol);
  REQUIRE(found.counterexample.has_value());
  const auto& [x, y] = *found.counterexample;
  CHECK(is_pair(x, y, cfg.kind, cfg.spec, kTol).holds);
  CHECK(definitional_check(x, y, cfg.kind, cfg.spec, kTol));
  const Matrix t = Matrix::from_reals({{1, 1}, {0, 1}});
  CHECK_FALSE(is_pair(t.apply(x), t.apply(y), cfg.kind, cfg.spec, kTol).holds);
  CHECK_FALSE(definitional_check(t.apply(x), t.apply(y), cfg.kind, cfg.spec, kTol));

  SampleConfig linf_cfg = cfg;
  linf_cfg.dim = 4;
  linf_cfg.spec = NormSpec::linf();
  linf_cfg.kind = PairKind::Parallel;
  const Matrix gp = gen_matrix(MatrixFamily::GenPerm, 4, Field::Real, 5);
  CHECK_FALSE(empirical_check(gp, linf_cfg, kTol).counterexample.has_value());

  CHECK_THROWS_AS(empirical_check(Matrix::identity(3, Field::Real), linf_cfg, kTol),
                  DimensionMismatchError);
}

TEST_CASE("non-parallel pairs inside independent spans") {
  const auto direct = find_nonparallel_in_span(Vector::from_reals({1, 0}),
                                               Vector::from_reals({0, 1}),
                                               NormSpec::linf(), kTol);
  REQUIRE(direct.has_value());
  CHECK(direct->first.entries() == Vector::from_reals({1, 0}).entries());
  CHECK(direct->second.entries() == Vector::from_reals({0, 1}).entries());

  const auto mixed = find_nonparallel_in_span(Vector::from_reals({1, 1}),
                                              Vector::from_reals({1, -1}),
                                              NormSpec::linf(), kTol);
  REQUIRE(mixed.has_value());
  CHECK_FALSE(
      is_pair_linf(mixed->first, mixed->second, PairKind::Parallel, kTol).holds);

  CHECK_FALSE(find_nonparallel_in_span(Vector::from_reals({1, 2}),
                                       Vector::from_reals({2, 4}), NormSpec::linf(), kTol)
                  .has_value());

  SplitMix64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const std::size_t n = 2 + rng.below(5);
    const Vector u = random_vector(rng, n, f);
    const Vector v = random_vector(rng, n, f);
    const auto found = find_nonparallel_in_span(u, v, NormSpec::linf(), kTol);
    REQUIRE(found.has_value());
    CHECK_FALSE(is_pair_linf(found->first, found->second, PairKind::Parallel, kTol).holds);
  }
}

TEST_CASE("peak dominance, sampled condition") {
  SampleConfig cfg;
  cfg.seed = 12;
  cfg.count = 300;
  cfg.dim = 2;
  cfg.field = Field::Real;

  CHECK(peak_dominance_empirical(Matrix::from_reals({{2, 1}, {1, 2}}), cfg, kTol));
  cfg.dim = 3;
  const Matrix scaled_id = Matrix::from_reals({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(peak_dominance_empirical(scaled_id, cfg, kTol));
  CHECK_FALSE(
      peak_dominance_empirical(Matrix::from_reals({{2, 1, 0}, {1, 2, 0}, {0, 0, 2}}), cfg, kTol));

  cfg.dim = 2;
  CHECK_THROWS_AS(peak_dominance_empirical(Matrix::from_reals({{1, 2}, {2, 1}}), cfg, kTol),
                  HypothesisViolatedError);
}

TEST_CASE("peak dominance, structural condition") {
  CHECK(peak_dominance_structural(Matrix({Cx(2, 0), Cx(1, 1), Cx(1, -1), Cx(2, 0)}, 2,
                                   Field::Complex),
                            kTol));
  CHECK(peak_dominance_structural(
      Matrix::from_reals({{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}), kTol));
  CHECK_FALSE(peak_dominance_structural(Matrix::from_reals({{2, 1}, {0, 2}}), kTol));
  CHECK_THROWS_AS(peak_dominance_structural(Matrix::from_reals({{1, 2}, {2, 1}}), kTol),
                  HypothesisViolatedError);
}

TEST_CASE("peak dominance conditions agree on hypothesis-satisfying matrices") {
  SplitMix64 rng(71);
  SampleConfig cfg;
  cfg.seed = 5;
  cfg.count = 150;
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + rng.below(3);
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    Matrix a = Matrix::zero(n, f);
    const int shape = static_cast<int>(rng.below(3));
    const double d = rng.uniform(1.0, 3.0);
    if (shape == 0) {
      for (std::size_t j = 0; j < n; ++j) a.set(j, j, Cx(d, 0));
    } else if (shape == 1 && n == 2) {
      const Cx z = (f == Field::Real ? Cx(1, 0) : rng.unit_phase()) * rng.uniform(0.1, 0.9) * d;
      a.set(0, 0, Cx(d, 0));
      a.set(1, 1, Cx(d, 0));
      a.set(0, 1, z);
      a.set(1, 0, std::conj(z));
    } else {
      // dominant near miss
      for (std::size_t j = 0; j < n; ++j) a.set(j, j, Cx(d + rng.uniform(0.0, 0.5), 0));
      const std::size_t r = rng.below(n);
      std::size_t c = rng.below(n);
      if (c == r) c = (c + 1) % n;
      a.set(r, c, Cx(rng.uniform(0.05, 0.5) * d, 0));
    }
    cfg.dim = n;
    cfg.field = f;
    CHECK(peak_dominance_empirical(a, cfg, kTol) == peak_dominance_structural(a, kTol));
  }
}
