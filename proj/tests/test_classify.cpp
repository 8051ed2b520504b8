#include <catch_amalgamated.hpp>

#include "normpar/classify.hpp"
#include "normpar/generators.hpp"
#include "normpar/rng.hpp"

using namespace normpar;

namespace {

const Tolerance kTol;

Matrix cmat(std::initializer_list<std::initializer_list<Cx>> rows) {
  std::vector<std::vector<Cx>> rs;
  for (const auto& r : rows) rs.emplace_back(r);
  return Matrix::from_rows(std::move(rs), Field::Complex);
}

bool entrywise_close(const Matrix& a, const Matrix& b, double eps) {
  const double scale = std::max(a.max_abs_entry(), b.max_abs_entry());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (std::abs(a(i, j) - b(i, j)) > eps * std::max(1e-300, scale)) return false;
  return true;
}

Matrix scaled(const Matrix& m, double c) {
  Matrix out = Matrix::zero(m.dim(), m.field());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out.set(i, j, c * m(i, j));
  return out;
}

Matrix reconstruct_c_form(const CForm& cf, Field f) {
  Matrix c = Matrix::zero(2, f);
  c.set(0, 0, Cx(1, 0));
  c.set(1, 1, Cx(1, 0));
  c.set(0, 1, cf.beta.value());
  c.set(1, 0, std::conj(cf.beta.value()));
  return scaled(c * cf.q, cf.gamma);
}

}  // namespace

TEST_CASE("row monomial recognition") {
  CHECK(is_row_monomial(Matrix::from_reals({{1, 0, 0}, {0, 0, 0}, {0, 0, 5}}), kTol));
  CHECK_FALSE(is_row_monomial(Matrix::from_reals({{1, 1}, {0, 2}}), kTol));
  CHECK(is_row_monomial(Matrix::from_reals({{0, 3}, {0, -1}}), kTol));
  CHECK(is_row_monomial(Matrix::zero(3, Field::Real), kTol));
}

TEST_CASE("monomial recognition") {
  CHECK(is_monomial(Matrix::from_reals({{0, 2}, {-3, 0}}), kTol));
  CHECK_FALSE(is_monomial(Matrix::from_reals({{1, 0}, {0, 0}}), kTol));
  CHECK(is_monomial(Matrix::identity(4, Field::Real), kTol));
}

TEST_CASE("generalized permutation form") {
  const auto gp = gen_perm_form(cmat({{Cx(0, 0), Cx(0, 2)}, {Cx(-2, 0), Cx(0, 0)}}), kTol);
  REQUIRE(gp.has_value());
  CHECK_THAT(gp->gamma, Catch::Matchers::WithinAbs(2.0, 1e-12));
  CHECK(gp->q(0, 1) == Cx(0, 1));
  CHECK(gp->q(1, 0) == Cx(-1, 0));

  CHECK_FALSE(gen_perm_form(Matrix::from_reals({{0, 2}, {3, 0}}), kTol).has_value());

  const auto z = gen_perm_form(Matrix::zero(3, Field::Real), kTol);
  REQUIRE(z.has_value());
  CHECK(z->gamma == 0.0);
  CHECK(entrywise_close(z->q, Matrix::identity(3, Field::Real), kTol.eps_eq));
}

TEST_CASE("rank one factorization") {
  const Matrix t = Matrix::from_reals({{3, 6}, {4, 8}});
  const auto r = rank_one_factor(t, kTol);
  REQUIRE(r.has_value());
  Matrix rebuilt = Matrix::zero(2, Field::Real);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) rebuilt.set(i, j, r->v[i] * r->u[j]);
  CHECK(entrywise_close(rebuilt, t, kTol.eps_eq));
  CHECK_FALSE(r->u.is_zero());
  CHECK_FALSE(r->v.is_zero());

  CHECK_FALSE(rank_one_factor(Matrix::identity(2, Field::Real), kTol).has_value());
  CHECK_FALSE(rank_one_factor(Matrix::zero(2, Field::Real), kTol).has_value());
}

TEST_CASE("two by two C form") {
  const auto real_case = two_by_two_c_form(Matrix::from_reals({{1, 0.5}, {0.5, 1}}), kTol);
  REQUIRE(real_case.has_value());
  CHECK_THAT(real_case->gamma, Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK(real_case->beta.value() == Cx(0.5, 0));
  CHECK(entrywise_close(real_case->q, Matrix::identity(2, Field::Real), kTol.eps_eq));

  const Matrix tc = cmat({{Cx(1, 0), Cx(0, 0.5)}, {Cx(0, -0.5), Cx(1, 0)}});
  const auto complex_case = two_by_two_c_form(tc, kTol);
  REQUIRE(complex_case.has_value());
  CHECK(complex_case->beta.value() == Cx(0, 0.5));
  CHECK(entrywise_close(reconstruct_c_form(*complex_case, Field::Complex), tc, kTol.eps_eq));

  CHECK_FALSE(two_by_two_c_form(Matrix::from_reals({{1, 0.5}, {0.7, 1}}), kTol).has_value());
}

TEST_CASE("two by two C form agrees with a brute force scan") {
  // independent oracle: scan gamma, beta, Q over a grid and look for a
  // reconstruction within tolerance
  auto brute_force_has_form = [](const Matrix& t) {
    for (bool diag : {true, false})
      for (int bs = -9; bs <= 9; ++bs) {
        const double beta = bs / 10.0;
        for (int gs = 1; gs <= 40; ++gs) {
          const double gamma = gs / 10.0;
          for (double q1 : {1.0, -1.0})
            for (double q2 : {1.0, -1.0}) {
              Matrix q = Matrix::zero(2, Field::Real);
              if (diag) {
                q.set(0, 0, Cx(q1, 0));
                q.set(1, 1, Cx(q2, 0));
              } else {
                q.set(0, 1, Cx(q1, 0));
                q.set(1, 0, Cx(q2, 0));
              }
              Matrix c = Matrix::from_reals({{1, beta}, {beta, 1}});
              Matrix rebuilt = Matrix::zero(2, Field::Real);
              const Matrix cq = c * q;
              bool close = true;
              for (std::size_t i = 0; i < 2 && close; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                  if (std::abs(gamma * cq(i, j) - t(i, j)) > 1e-6) {
                    close = false;
                    break;
                  }
              (void)rebuilt;
              if (close) return true;
            }
        }
      }
    return false;
  };

  const Matrix yes = Matrix::from_reals({{1, 0.5}, {0.5, 1}});
  const Matrix no = Matrix::from_reals({{1, 0.5}, {0.7, 1}});
  CHECK(brute_force_has_form(yes));
  CHECK(two_by_two_c_form(yes, kTol).has_value());
  CHECK_FALSE(brute_force_has_form(no));
  CHECK_FALSE(two_by_two_c_form(no, kTol).has_value());
}

TEST_CASE("classifier scale invariance and reconstruction") {
  SplitMix64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const std::size_t n = 2 + rng.below(4);
    const auto fam = static_cast<MatrixFamily>(1 + rng.below(3));  // monomial/genperm/rankone
    const Matrix t = gen_matrix(fam, n, f, rng.next());
    const double c = rng.log_uniform(0.05, 20.0);
    const Matrix tc = scaled(t, c);

    CHECK(is_row_monomial(t, kTol) == is_row_monomial(tc, kTol));
    CHECK(is_monomial(t, kTol) == is_monomial(tc, kTol));
    const auto g1 = gen_perm_form(t, kTol);
    const auto g2 = gen_perm_form(tc, kTol);
    CHECK(g1.has_value() == g2.has_value());
    if (g1 && g2) CHECK_THAT(g2->gamma, Catch::Matchers::WithinRel(c * g1->gamma, 1e-9));

    const auto r1 = rank_one_factor(t, kTol);
    const auto r2 = rank_one_factor(tc, kTol);
    CHECK(r1.has_value() == r2.has_value());
    if (r1) {
      Matrix rebuilt = Matrix::zero(n, f);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) rebuilt.set(a, b, r1->v[a] * r1->u[b]);
      CHECK(entrywise_close(rebuilt, t, kTol.eps_eq));
    }
    if (g1) CHECK(is_monomial(t, kTol));
  }
}

TEST_CASE("generic matrices match no special form") {
  SplitMix64 rng(31);
  int c_hits = 0, r_hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const Field f = rng.coin() ? Field::Real : Field::Complex;
    const Matrix t = gen_matrix(MatrixFamily::Dense, 2, f, rng.next());
    if (two_by_two_c_form(t, kTol)) ++c_hits;
    if (rank_one_factor(t, kTol)) ++r_hits;
  }
  CHECK(c_hits == 0);
  CHECK(r_hits == 0);
}
