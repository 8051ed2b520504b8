#pragma once

#include <optional>
#include <utility>

#include "normpar/pairs.hpp"
#include "normpar/rng.hpp"

namespace normpar {

/// Deterministic campaign description. Identical configs reproduce
/// identical pair streams bit for bit; each index owns an independent
/// substream, so campaigns may be sharded by index ranges.
struct SampleConfig {
  std::uint64_t seed = 0;
  int count = 1;
  std::size_t dim = 2;
  Field field = Field::Real;
  NormSpec spec = NormSpec::l1();
  PairKind kind = PairKind::TEA;
  double mag_lo = 0.1;
  double mag_hi = 10.0;

  void validate() const {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    if (!(mag_lo > 0.0) || !(mag_hi >= mag_lo))
      throw std::invalid_argument("magnitude range requires 0 < lo <= hi");
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
  }
};

namespace detail {

inline Cx random_phase(SplitMix64& rng, Field f) {
  return f == Field::Real ? Cx(rng.coin() ? 1.0 : -1.0, 0.0) : rng.unit_phase();
}

}  // namespace detail

/// Fully random vector, log-uniform magnitudes in [lo, hi].
inline Vector random_vector(SplitMix64& rng, std::size_t dim, Field f, double lo = 0.1,
                            double hi = 10.0) {
  std::vector<Cx> e(dim);
  for (auto& z : e) z = rng.log_uniform(lo, hi) * detail::random_phase(rng, f);
  return Vector(std::move(e), f);
}

/// Generates the index-th pair of the campaign; the construction
/// inverts the coordinate criterion of the requested (norm, kind), so
/// every generated pair is a valid pair of that kind.
inline std::pair<Vector, Vector> sample_pair(const SampleConfig& cfg, int index) {
  cfg.validate();
  if (index < 0 || index >= cfg.count)
    throw std::out_of_range("sample index outside the campaign range");
  SplitMix64 rng(SplitMix64::mix(cfg.seed, static_cast<std::uint64_t>(index)));
  const std::size_t n = cfg.dim;
  const Field f = cfg.field;

  auto phase = [&] { return detail::random_phase(rng, f); };
  auto magnitude = [&] { return rng.log_uniform(cfg.mag_lo, cfg.mag_hi); };
  // occasional zero coordinates exercise the ray-neutral paths
  auto sparse_magnitude = [&] { return rng.u01() < 0.15 ? 0.0 : magnitude(); };

  std::vector<Cx> xe(n), ye(n);
  switch (cfg.spec.kind()) {
    case NormSpec::Kind::L1: {
      // shared per-coordinate phases, independent nonnegative magnitudes
      for (std::size_t k = 0; k < n; ++k) {
        const Cx theta = phase();
        xe[k] = sparse_magnitude() * theta;
        ye[k] = sparse_magnitude() * theta;
      }
      if (cfg.kind == PairKind::Parallel) {
        const Cx lambda = phase();
        for (auto& z : ye) z *= lambda;
      }
      break;
    }
    case NormSpec::Kind::Linf: {
      for (std::size_t k = 0; k < n; ++k) {
        xe[k] = magnitude() * phase();
        ye[k] = magnitude() * phase();
      }
      const auto peak = static_cast<std::size_t>(rng.below(n));
      auto force_peak = [&](std::vector<Cx>& e) {
        double others = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          if (k != peak) others = std::max(others, std::abs(e[k]));
        const double target = others > 0.0 ? others * rng.uniform(1.05, 2.0) : magnitude();
        e[peak] = target * phase();
      };
      force_peak(xe);
      force_peak(ye);
      if (cfg.kind == PairKind::TEA)
        ye[peak] = std::abs(ye[peak]) * (xe[peak] / std::abs(xe[peak]));
      break;
    }
    case NormSpec::Kind::Lp: {
      for (std::size_t k = 0; k < n; ++k) xe[k] = magnitude() * phase();
      const Cx t = cfg.kind == PairKind::TEA
                       ? Cx(rng.log_uniform(cfg.mag_lo, cfg.mag_hi), 0.0)
                       : magnitude() * phase();
      for (std::size_t k = 0; k < n; ++k) ye[k] = t * xe[k];
      break;
    }
  }
  return {Vector(std::move(xe), f), Vector(std::move(ye), f)};
}

struct EmpiricalResult {
  int checked = 0;
  std::optional<std::pair<Vector, Vector>> counterexample;
};

/// Runs the campaign against T and returns the first sampled pair whose
/// image fails the criterion, confirmed definitionally on both sides.
/// A refuter, not a prover: NoCounterexample is reported as an empty
/// optional after `count` clean samples.
inline EmpiricalResult empirical_check(const Matrix& t, const SampleConfig& cfg,
                                       const Tolerance& tol) {
  if (t.dim() != cfg.dim) throw DimensionMismatchError("matrix/campaign dimension mismatch");
  if (t.field() != cfg.field) throw FieldMismatchError("matrix/campaign field mismatch");
  for (int i = 0; i < cfg.count; ++i) {
    auto [x, y] = sample_pair(cfg, i);
    if (!is_pair(x, y, cfg.kind, cfg.spec, tol).holds) continue;
    const Vector tx = t.apply(x), ty = t.apply(y);
    if (is_pair(tx, ty, cfg.kind, cfg.spec, tol).holds) continue;
    if (definitional_check(x, y, cfg.kind, cfg.spec, tol) &&
        !definitional_check(tx, ty, cfg.kind, cfg.spec, tol))
      return {i + 1, std::make_pair(std::move(x), std::move(y))};
  }
  return {cfg.count, std::nullopt};
}

/// If u, v are linearly independent, produce a pair from span{u, v}
/// that is not linf-parallel; none iff u, v are dependent. The search
/// runs over a deterministic grid of coefficient combinations.
inline std::optional<std::pair<Vector, Vector>> find_nonparallel_in_span(
    const Vector& u, const Vector& v, const NormSpec& spec, const Tolerance& tol) {
  if (spec.kind() != NormSpec::Kind::Linf)
    throw std::invalid_argument("find_nonparallel_in_span is defined for the linf norm");
  Vector::check_compatible(u, v);

  const double scale = u.max_abs() * v.max_abs();
  bool dependent = true;
  for (std::size_t i = 0; i < u.dim() && dependent; ++i)
    for (std::size_t j = i + 1; j < u.dim(); ++j)
      if (std::abs(u[i] * v[j] - u[j] * v[i]) > tol.eps_eq * scale) {
        dependent = false;
        break;
      }
  if (dependent) return std::nullopt;

  std::vector<Vector> w{u, v, u + v, u - v};
  // coordinate cancellations: u - (u_k/v_k) v vanishes at k, so paired
  // with a v that peaks only at k the peak sets are disjoint
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (std::abs(v[k]) > 0.0) w.push_back(u + v.scaled(-u[k] / v[k]));
    if (std::abs(u[k]) > 0.0) w.push_back(v + u.scaled(-v[k] / u[k]));
  }
  std::vector<Cx> coeffs = {Cx(2, 0),  Cx(-2, 0),  Cx(0.5, 0),  Cx(-0.5, 0),
                            Cx(4, 0),  Cx(-4, 0),  Cx(0.25, 0), Cx(-0.25, 0),
                            Cx(3, 0),  Cx(-3, 0),  Cx(8, 0),    Cx(-8, 0)};
  if (u.field() == Field::Complex) {
    for (Cx s : {Cx(0, 1), Cx(0, -1), Cx(0, 2), Cx(0, -2), Cx(0, 0.5), Cx(0, -0.5),
                 Cx(1, 1), Cx(1, -1), Cx(-1, 1), Cx(-1, -1)})
      coeffs.push_back(s);
  }
  for (Cx s : coeffs) {
    w.push_back(u + v.scaled(s));
    w.push_back(v + u.scaled(s));
  }

  int budget = 1000;
  for (std::size_t a = 0; a < w.size() && budget > 0; ++a)
    for (std::size_t b = a + 1; b < w.size() && budget > 0; ++b) {
      --budget;
      if (!is_pair_linf(w[a], w[b], PairKind::Parallel, tol).holds)
        return std::make_pair(w[a], w[b]);
    }

  // random coefficients as a last resort; independent spans always contain one
  SplitMix64 rng(0x5eedULL);
  for (int i = 0; i < 1000; ++i) {
    const Cx s = rng.uniform(-10.0, 10.0) * detail::random_phase(rng, u.field());
    const Cx r = rng.uniform(-10.0, 10.0) * detail::random_phase(rng, u.field());
    const Vector x = u + v.scaled(s), y = u + v.scaled(r);
    if (!is_pair_linf(x, y, PairKind::Parallel, tol).holds) return std::make_pair(x, y);
  }
  throw std::runtime_error("independent span yielded no non-parallel pair within budget");
}

namespace detail {

inline void check_dominance_hypothesis(const Matrix& a, const Tolerance& tol) {
  const std::size_t n = a.dim();
  auto dominant = [&](bool row_side) {
    for (std::size_t j = 0; j < n; ++j) {
      const Cx d = a(j, j);
      if (std::abs(d.imag()) > tol.eps_eq * std::max(1.0, std::abs(d))) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        if (!(d.real() > std::abs(row_side ? a(j, k) : a(k, j)))) return false;
      }
    }
    return true;
  };
  if (!dominant(true) && !dominant(false))
    throw HypothesisViolatedError("need a_jj > |a_jk| for all k != j, or a_jj > |a_kj|");
}

// A peak set {k : |x_k| maximal} must map under y = A^t x to
// coordinates of one shared maximal modulus: equal moduli inside the
// set, nothing larger outside.
inline bool peak_closure_violated(const Matrix& at, const Vector& x, const Tolerance& tol) {
  const PeakSet k = peak_set(x, tol);
  const Vector y = at.apply(x);
  const double yscale = y.max_abs();
  if (yscale == 0.0) return false;
  const double eps = tol.eps_peak * yscale;

  double in_min = yscale, in_max = 0.0;
  for (std::size_t idx : k.indices) {
    in_min = std::min(in_min, std::abs(y[idx]));
    in_max = std::max(in_max, std::abs(y[idx]));
  }
  if (in_max - in_min > eps) return true;
  for (std::size_t s = 0; s < y.dim(); ++s)
    if (!k.contains(s) && std::abs(y[s]) > in_max + eps) return true;
  return false;
}

inline std::vector<Vector> peak_dominance_probes(std::size_t n, Field f) {
  std::vector<Vector> probes;
  auto signs = [&](const std::vector<double>& s) {
    std::vector<Cx> e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = Cx(s[k], 0.0);
    return Vector(std::move(e), f);
  };
  std::vector<double> ones(n, 1.0);
  probes.push_back(signs(ones));
  for (std::size_t j = 0; j < n; ++j) {
    auto s = ones;
    s[j] = -1.0;
    probes.push_back(signs(s));
  }
  std::vector<double> headflip(n, -1.0);
  headflip[0] = 1.0;
  probes.push_back(signs(headflip));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      std::vector<double> plus(n, 0.0), minus(n, 0.0);
      plus[j] = 1.0;
      plus[k] = 1.0;
      minus[j] = 1.0;
      minus[k] = -1.0;
      probes.push_back(signs(plus));
      probes.push_back(signs(minus));
    }
  return probes;
}

}  // namespace detail

/// Sampled side of the dominance dichotomy: every x with a strict unique peak
/// coordinate r must map under A^t to a vector peaking at r. Tested on
/// the structured probes (all-ones, single sign flips, (1,-1,...,-1),
/// pairwise (1,+-1,0,...)) plus `count` random strict-peak samples;
/// the probes trigger the known violations deterministically, sampling
/// alone cannot certify the property.
inline bool peak_dominance_empirical(const Matrix& a, const SampleConfig& cfg, const Tolerance& tol) {
  detail::check_dominance_hypothesis(a, tol);
  if (a.dim() != cfg.dim) throw DimensionMismatchError("matrix/campaign dimension mismatch");
  const Matrix at = a.transpose();

  for (const Vector& p : detail::peak_dominance_probes(a.dim(), a.field()))
    if (detail::peak_closure_violated(at, p, tol)) return false;

  for (int i = 0; i < cfg.count; ++i) {
    SplitMix64 rng(SplitMix64::mix(cfg.seed, static_cast<std::uint64_t>(i)));
    std::vector<Cx> e(a.dim());
    for (auto& z : e)
      z = rng.log_uniform(cfg.mag_lo, cfg.mag_hi) * detail::random_phase(rng, a.field());
    const auto r = static_cast<std::size_t>(rng.below(a.dim()));
    double others = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (k != r) others = std::max(others, std::abs(e[k]));
    const double target = others > 0.0 ? others * rng.uniform(1.05, 2.0) : 1.0;
    e[r] = target * detail::random_phase(rng, a.field());
    if (detail::peak_closure_violated(at, Vector(std::move(e), a.field()), tol)) return false;
  }
  return true;
}

/// Structural side of the dominance dichotomy: either n = 2 and A is Hermitian with
/// a11 = a22 (the hypothesis supplies a11 > |a12|), or A = a11 I.
inline bool peak_dominance_structural(const Matrix& a, const Tolerance& tol) {
  detail::check_dominance_hypothesis(a, tol);
  const std::size_t n = a.dim();
  if (n == 2 && approx_eq(a(0, 1), std::conj(a(1, 0)), tol) && approx_eq(a(0, 0), a(1, 1), tol))
    return true;
  const Cx d = a(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!approx_eq(a(i, j), i == j ? d : Cx(0.0, 0.0), tol)) return false;
  return true;
}

}  // namespace normpar
