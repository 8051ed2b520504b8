#pragma once

#include <cmath>
#include <limits>

#include "normpar/numeric.hpp"

namespace normpar {

/// Which lp norm is in force: l1, linf, or lp with 1 < p < infinity
/// strictly. p = 1 and p = infinity must be spelled as L1/Linf so the
/// strictly convex fast paths are never invoked at the boundary.
class NormSpec {
 public:
  enum class Kind { L1, Linf, Lp };

  static NormSpec l1() { return NormSpec(Kind::L1, 0.0); }
  static NormSpec linf() { return NormSpec(Kind::Linf, 0.0); }
  static NormSpec lp(double p) {
    if (!(p > 1.0) || !(p < std::numeric_limits<double>::infinity()) || std::isnan(p))
      throw std::invalid_argument("lp norm requires 1 < p < infinity");
    return NormSpec(Kind::Lp, p);
  }

  Kind kind() const { return kind_; }
  double p() const { return p_; }

  bool operator==(const NormSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  NormSpec(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

inline double norm(const Vector& x, const NormSpec& spec) {
  switch (spec.kind()) {
    case NormSpec::Kind::L1: {
      double s = 0.0;
      for (const Cx& z : x.entries()) s += std::abs(z);
      return s;
    }
    case NormSpec::Kind::Linf:
      return x.max_abs();
    case NormSpec::Kind::Lp: {
      // moduli first, then real powers; entries may be complex
      double s = 0.0;
      for (const Cx& z : x.entries()) s += std::pow(std::abs(z), spec.p());
      return std::pow(s, 1.0 / spec.p());
    }
  }
  return 0.0;
}

/// The coordinates where a vector attains its linf norm, with relative
/// tolerance eps_peak against the max modulus.
struct PeakSet {
  std::vector<std::size_t> indices;
  double value = 0.0;

  bool contains(std::size_t k) const {
    return std::find(indices.begin(), indices.end(), k) != indices.end();
  }
};

inline PeakSet peak_set(const Vector& x, const Tolerance& tol) {
  const double m = x.max_abs();
  if (m == 0.0) throw ZeroVectorError("peak_set of the zero vector");
  PeakSet ps;
  ps.value = m;
  const double cut = m * (1.0 - tol.eps_peak);
  for (std::size_t k = 0; k < x.dim(); ++k)
    if (std::abs(x[k]) >= cut) ps.indices.push_back(k);
  return ps;
}

}  // namespace normpar
