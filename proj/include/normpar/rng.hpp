#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace normpar {

/// splitmix64. Used instead of <random> engines plus distributions so
/// that identical seeds give bit-identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// uniform double in [0, 1)
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  double log_uniform(double lo, double hi) {
    return lo * std::exp(u01() * std::log(hi / lo));
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return (next() & 1ULL) != 0ULL; }

  std::complex<double> unit_phase() {
    constexpr double kTau = 6.283185307179586476925286766559;
    return std::polar(1.0, kTau * u01());
  }

  /// derive an independent stream for one index of a campaign
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 m(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    m.next();
    return m.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace normpar
