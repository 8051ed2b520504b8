#pragma once

#include <optional>

#include "normpar/norms.hpp"
#include "normpar/numeric.hpp"

namespace normpar {

enum class PairKind { Parallel, TEA };

/// Outcome of a pair predicate. On success the witness is a unimodular
/// mu with ||x + mu y|| = ||x|| + ||y|| (mu = 1 for TEA), and for the
/// linf criteria additionally a coordinate where both vectors peak.
struct PairVerdict {
  bool holds = false;
  std::optional<Scalar> mu;
  std::optional<std::size_t> peak_index;

  static PairVerdict yes(Scalar m) { return PairVerdict{true, m, std::nullopt}; }
  static PairVerdict yes(Scalar m, std::size_t k) { return PairVerdict{true, m, k}; }
  static PairVerdict no() { return PairVerdict{false, std::nullopt, std::nullopt}; }
};

namespace detail {

inline Scalar unit_one(Field f) { return Scalar(Cx(1.0, 0.0), f); }

inline Cx unit_direction(Cx z) { return z / std::abs(z); }

// Coordinate products conj(x_k) y_k drive both l1 criteria.
inline std::vector<Cx> coordinate_products(const Vector& x, const Vector& y) {
  Vector::check_compatible(x, y);
  std::vector<Cx> p(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) p[k] = std::conj(x[k]) * y[k];
  return p;
}

}  // namespace detail

/// l1 criterion. TEA iff every product conj(x_k) y_k is nonnegative
/// real; parallel iff the nonzero products all share one ray, with
/// witness mu rotating that ray onto the nonnegative reals.
inline PairVerdict is_pair_l1(const Vector& x, const Vector& y, PairKind kind,
                              const Tolerance& tol) {
  const auto p = detail::coordinate_products(x, y);
  const Field f = x.field();
  if (x.is_zero() || y.is_zero()) return PairVerdict::yes(detail::unit_one(f));

  if (kind == PairKind::TEA) {
    for (const Cx& pk : p)
      if (!is_nonneg_real(pk, tol)) return PairVerdict::no();
    return PairVerdict::yes(detail::unit_one(f));
  }

  double pscale = 0.0;
  std::size_t anchor = 0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (std::abs(p[k]) > pscale) {
      pscale = std::abs(p[k]);
      anchor = k;
    }
  if (pscale == 0.0) return PairVerdict::yes(detail::unit_one(f));

  // products below eps_eq * pscale are ray-neutral
  std::vector<Cx> dirs;
  for (const Cx& pk : p)
    if (std::abs(pk) > tol.eps_eq * pscale) dirs.push_back(detail::unit_direction(pk));
  for (std::size_t a = 0; a < dirs.size(); ++a)
    for (std::size_t b = a + 1; b < dirs.size(); ++b)
      if (std::abs(dirs[a] - dirs[b]) > tol.eps_eq) return PairVerdict::no();

  if (f == Field::Real)
    return PairVerdict::yes(Scalar(Cx(p[anchor].real() > 0.0 ? 1.0 : -1.0, 0.0), f));
  return PairVerdict::yes(Scalar(std::conj(detail::unit_direction(p[anchor])), f));
}

/// linf criterion. Parallel iff the peak sets intersect; TEA iff some
/// common peak coordinate additionally has a nonnegative real product.
inline PairVerdict is_pair_linf(const Vector& x, const Vector& y, PairKind kind,
                                const Tolerance& tol) {
  Vector::check_compatible(x, y);
  const Field f = x.field();
  if (x.is_zero() || y.is_zero()) return PairVerdict::yes(detail::unit_one(f));

  const PeakSet px = peak_set(x, tol);
  const PeakSet py = peak_set(y, tol);

  auto align_mu = [&](std::size_t k) -> Scalar {
    if (f == Field::Real)
      return Scalar(Cx(x[k].real() * y[k].real() > 0.0 ? 1.0 : -1.0, 0.0), f);
    return Scalar(x[k] * std::conj(y[k]) / (std::abs(x[k]) * std::abs(y[k])), f);
  };

  if (kind == PairKind::Parallel) {
    for (std::size_t k : px.indices)
      if (py.contains(k)) return PairVerdict::yes(align_mu(k), k);
    return PairVerdict::no();
  }
  for (std::size_t k : px.indices)
    if (py.contains(k) && is_nonneg_real(std::conj(x[k]) * y[k], tol))
      return PairVerdict::yes(detail::unit_one(f), k);
  return PairVerdict::no();
}

/// Strictly convex lp criterion (1 < p < infinity). Parallel iff x, y
/// are linearly dependent; TEA iff additionally the dependence ratio is
/// nonnegative real, or either vector is zero.
inline PairVerdict is_pair_lp_strict(const Vector& x, const Vector& y, PairKind kind,
                                     const Tolerance& tol) {
  Vector::check_compatible(x, y);
  const Field f = x.field();
  if (x.is_zero() || y.is_zero()) return PairVerdict::yes(detail::unit_one(f));

  const double scale = x.max_abs() * y.max_abs();
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = i + 1; j < x.dim(); ++j)
      if (std::abs(x[i] * y[j] - x[j] * y[i]) > tol.eps_eq * scale) return PairVerdict::no();

  // dependent: y = t x with t = <x,y>/<x,x>
  Cx num(0.0, 0.0);
  double den = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    num += std::conj(x[k]) * y[k];
    den += std::norm(x[k]);
  }
  const Cx t = num / den;
  if (kind == PairKind::TEA) {
    if (!is_nonneg_real(t, tol)) return PairVerdict::no();
    return PairVerdict::yes(detail::unit_one(f));
  }
  if (f == Field::Real)
    return PairVerdict::yes(Scalar(Cx(t.real() >= 0.0 ? 1.0 : -1.0, 0.0), f));
  const double tm = std::abs(t);
  return PairVerdict::yes(tm == 0.0 ? detail::unit_one(f)
                                    : Scalar(std::conj(t) / tm, f));
}

inline PairVerdict is_pair(const Vector& x, const Vector& y, PairKind kind,
                           const NormSpec& spec, const Tolerance& tol) {
  switch (spec.kind()) {
    case NormSpec::Kind::L1:
      return is_pair_l1(x, y, kind, tol);
    case NormSpec::Kind::Linf:
      return is_pair_linf(x, y, kind, tol);
    case NormSpec::Kind::Lp:
      return is_pair_lp_strict(x, y, kind, tol);
  }
  return PairVerdict::no();
}

namespace detail {

inline double combo_norm(const Vector& x, const Vector& y, Cx mu, const NormSpec& spec) {
  switch (spec.kind()) {
    case NormSpec::Kind::L1: {
      double s = 0.0;
      for (std::size_t k = 0; k < x.dim(); ++k) s += std::abs(x[k] + mu * y[k]);
      return s;
    }
    case NormSpec::Kind::Linf: {
      double m = 0.0;
      for (std::size_t k = 0; k < x.dim(); ++k) m = std::max(m, std::abs(x[k] + mu * y[k]));
      return m;
    }
    case NormSpec::Kind::Lp: {
      double s = 0.0;
      for (std::size_t k = 0; k < x.dim(); ++k)
        s += std::pow(std::abs(x[k] + mu * y[k]), spec.p());
      return std::pow(s, 1.0 / spec.p());
    }
  }
  return 0.0;
}

}  // namespace detail

/// Definition-level oracle, independent of the coordinate criteria.
/// TEA tests ||x+y|| = ||x|| + ||y|| directly. Parallel searches a
/// finite unimodular candidate set: {+1, -1} over the reals; over the
/// complex field the criterion-derived common-phase candidate for l1,
/// the coordinate-aligning candidates for linf, and a 720-point unit
/// circle grid refined once around the best point for lp.
inline bool definitional_check(const Vector& x, const Vector& y, PairKind kind,
                               const NormSpec& spec, const Tolerance& tol) {
  Vector::check_compatible(x, y);
  const double target = norm(x, spec) + norm(y, spec);
  auto attains = [&](Cx mu) { return approx_eq(detail::combo_norm(x, y, mu, spec), target, tol); };

  if (kind == PairKind::TEA) return attains(Cx(1.0, 0.0));

  if (x.field() == Field::Real) return attains(Cx(1.0, 0.0)) || attains(Cx(-1.0, 0.0));

  std::vector<Cx> candidates{Cx(1.0, 0.0), Cx(-1.0, 0.0)};
  switch (spec.kind()) {
    case NormSpec::Kind::L1: {
      const auto p = detail::coordinate_products(x, y);
      double pscale = 0.0;
      std::size_t anchor = 0;
      for (std::size_t k = 0; k < p.size(); ++k)
        if (std::abs(p[k]) > pscale) {
          pscale = std::abs(p[k]);
          anchor = k;
        }
      if (pscale > 0.0) candidates.push_back(std::conj(detail::unit_direction(p[anchor])));
      break;
    }
    case NormSpec::Kind::Linf: {
      for (std::size_t k = 0; k < x.dim(); ++k) {
        const double m = std::abs(x[k]) * std::abs(y[k]);
        if (m > 0.0) candidates.push_back(x[k] * std::conj(y[k]) / m);
      }
      break;
    }
    case NormSpec::Kind::Lp: {
      constexpr int kGrid = 720;
      constexpr double kTau = 6.283185307179586476925286766559;
      double best = -1.0, best_phi = 0.0;
      for (int j = 0; j < kGrid; ++j) {
        const double phi = kTau * j / kGrid;
        const double v = detail::combo_norm(x, y, std::polar(1.0, phi), spec);
        if (v > best) {
          best = v;
          best_phi = phi;
        }
      }
      const double h = kTau / kGrid;
      for (int j = 0; j <= kGrid; ++j) {
        const double phi = best_phi - h + 2.0 * h * j / kGrid;
        candidates.push_back(std::polar(1.0, phi));
      }
      break;
    }
  }
  for (const Cx& mu : candidates)
    if (attains(mu)) return true;
  return false;
}

}  // namespace normpar
