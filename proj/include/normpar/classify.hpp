#pragma once

#include <optional>

#include "normpar/numeric.hpp"

namespace normpar {

enum class StructureKind {
  Zero,
  RowMonomial,
  Monomial,
  GeneralizedPermutation,
  RankOne,
  TwoByTwoC,
  General
};

inline const char* structure_kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Zero: return "zero";
    case StructureKind::RowMonomial: return "row_monomial";
    case StructureKind::Monomial: return "monomial";
    case StructureKind::GeneralizedPermutation: return "generalized_permutation";
    case StructureKind::RankOne: return "rank_one";
    case StructureKind::TwoByTwoC: return "two_by_two_c";
    case StructureKind::General: return "general";
  }
  return "unknown";
}

/// T = gamma Q with Q a generalized permutation matrix. gamma = 0 with
/// Q = identity encodes the zero map.
struct GenPermForm {
  double gamma;
  Matrix q;
};

/// T = v u^t, u and v nonzero.
struct RankOneForm {
  Vector u;
  Vector v;
};

/// n = 2 exceptional family T = gamma C Q, C = [[1, beta],[conj(beta), 1]],
/// |beta| < 1, Q a generalized permutation. gamma is forced real positive
/// and Q's nonzero entries unimodular, so the representative is unique.
struct CForm {
  double gamma;
  Scalar beta;
  Matrix q;
};

struct StructureClass {
  StructureKind kind = StructureKind::General;
  std::optional<GenPermForm> gen_perm;
  std::optional<RankOneForm> rank_one;
  std::optional<CForm> c_form;

  static StructureClass of(StructureKind k) { return StructureClass{k, {}, {}, {}}; }
};

namespace detail {

// scale-relative equality of nonnegative magnitudes
inline bool rel_eq(double a, double b, double eps) {
  return std::abs(a - b) <= eps * std::max(std::abs(a), std::abs(b));
}

inline bool rel_eq(Cx a, Cx b, double eps) {
  return std::abs(a - b) <= eps * std::max(std::abs(a), std::abs(b));
}

inline bool entry_nonzero(Cx v, double matrix_scale, const Tolerance& tol) {
  return std::abs(v) > tol.eps_eq * matrix_scale;
}

}  // namespace detail

/// Each row has at most one nonzero entry, relative to the largest
/// entry magnitude of the matrix.
inline bool is_row_monomial(const Matrix& t, const Tolerance& tol) {
  const double scale = t.max_abs_entry();
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    int nz = 0;
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (detail::entry_nonzero(t(i, j), scale, tol) && ++nz > 1) return false;
  }
  return true;
}

/// Exactly one nonzero entry in each row and each column.
inline bool is_monomial(const Matrix& t, const Tolerance& tol) {
  const double scale = t.max_abs_entry();
  if (scale == 0.0) return false;
  const std::size_t n = t.dim();
  std::vector<int> row_nz(n, 0), col_nz(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (detail::entry_nonzero(t(i, j), scale, tol)) {
        ++row_nz[i];
        ++col_nz[j];
      }
  for (std::size_t k = 0; k < n; ++k)
    if (row_nz[k] != 1 || col_nz[k] != 1) return false;
  return true;
}

/// If T is monomial with all nonzero moduli equal, split it as gamma Q
/// with gamma that common modulus and Q exactly unimodular. The zero
/// matrix yields gamma = 0, Q = identity.
inline std::optional<GenPermForm> gen_perm_form(const Matrix& t, const Tolerance& tol) {
  const std::size_t n = t.dim();
  const double scale = t.max_abs_entry();
  if (scale == 0.0) return GenPermForm{0.0, Matrix::identity(n, t.field())};
  if (!is_monomial(t, tol)) return std::nullopt;

  double lo = scale, hi = 0.0, sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (detail::entry_nonzero(t(i, j), scale, tol)) {
        const double m = std::abs(t(i, j));
        lo = std::min(lo, m);
        hi = std::max(hi, m);
        sum += m;
        ++count;
      }
  if (!detail::rel_eq(lo, hi, tol.eps_eq)) return std::nullopt;

  const double gamma = sum / static_cast<double>(count);
  Matrix q = Matrix::zero(n, t.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (detail::entry_nonzero(t(i, j), scale, tol))
        q.set(i, j, t(i, j) / std::abs(t(i, j)));
  return GenPermForm{gamma, std::move(q)};
}

/// Rank-one factorization T = v u^t with v the column of largest norm,
/// validated by entrywise reconstruction.
inline std::optional<RankOneForm> rank_one_factor(const Matrix& t, const Tolerance& tol) {
  if (rank(t, tol) != 1) return std::nullopt;
  const std::size_t n = t.dim();

  std::size_t vc = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(t(i, j));
    if (s > best) {
      best = s;
      vc = j;
    }
  }
  std::vector<Cx> v(n), u(n);
  double vden = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = t(i, vc);
    vden += std::norm(v[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Cx dot(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) dot += std::conj(v[i]) * t(i, j);
    u[j] = dot / vden;
  }

  const double scale = t.max_abs_entry();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(t(i, j) - v[i] * u[j]) > tol.eps_eq * scale) return std::nullopt;

  const Field f = t.field();
  return RankOneForm{Vector(std::move(u), f), Vector(std::move(v), f)};
}

namespace detail {

// One shape attempt for two_by_two_c_form. d1, d2 sit in the gamma
// slots of T Q^{-1}, o1, o2 in the beta slots; build_q assembles the
// matching Q from the recovered unimodular entries.
inline std::optional<CForm> c_form_attempt(Cx d1, Cx d2, Cx o1, Cx o2, bool diagonal,
                                           Field field, const Tolerance& tol) {
  const double m1 = std::abs(d1), m2 = std::abs(d2);
  if (m1 == 0.0 || m2 == 0.0) return std::nullopt;
  if (!rel_eq(m1, m2, tol.eps_eq)) return std::nullopt;
  const double gamma = 0.5 * (m1 + m2);
  const Cx q1 = d1 / m1, q2 = d2 / m2;

  const Cx beta = o1 / (q2 * gamma);
  const Cx beta_conj_slot = o2 / (q1 * gamma);
  if (!rel_eq(std::conj(beta), beta_conj_slot, tol.eps_eq)) return std::nullopt;
  if (!(std::abs(beta) < 1.0 - tol.eps_eq)) return std::nullopt;
  if (field == Field::Real && std::abs(beta.imag()) > tol.eps_eq) return std::nullopt;

  Matrix q = Matrix::zero(2, field);
  const Cx b1 = field == Field::Real ? Cx(q1.real() > 0 ? 1.0 : -1.0, 0.0) : q1;
  const Cx b2 = field == Field::Real ? Cx(q2.real() > 0 ? 1.0 : -1.0, 0.0) : q2;
  if (diagonal) {
    q.set(0, 0, b1);
    q.set(1, 1, b2);
  } else {
    q.set(0, 1, b1);
    q.set(1, 0, b2);
  }
  const Cx beta_out = field == Field::Real ? Cx(beta.real(), 0.0) : beta;
  return CForm{gamma, Scalar(beta_out, field), std::move(q)};
}

}  // namespace detail

/// n = 2 only. Tries the diagonal and antidiagonal generalized
/// permutation shapes for Q; accepts iff T Q^{-1} has an equal positive
/// modulus diagonal gamma and mutually conjugate off-diagonal entries of
/// modulus below gamma. Returns the first consistent decomposition.
inline std::optional<CForm> two_by_two_c_form(const Matrix& t, const Tolerance& tol) {
  if (t.dim() != 2) return std::nullopt;
  // diagonal Q: T Q^{-1} = [[t00/q1, t01/q2],[t10/q1, t11/q2]]
  if (auto r = detail::c_form_attempt(t(0, 0), t(1, 1), t(0, 1), t(1, 0),
                                      /*diagonal=*/true, t.field(), tol))
    return r;
  // antidiagonal Q = [[0,a],[b,0]]: T Q^{-1} = [[t01/a, t00/b],[t11/a, t10/b]]
  return detail::c_form_attempt(t(0, 1), t(1, 0), t(0, 0), t(1, 1),
                                /*diagonal=*/false, t.field(), tol);
}

}  // namespace normpar
