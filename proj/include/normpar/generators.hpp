#pragma once

#include <optional>
#include <string>

#include "normpar/numeric.hpp"
#include "normpar/rng.hpp"

namespace normpar {

enum class MatrixFamily { Identity, Monomial, GenPerm, RankOne, C2, Dense };

inline std::optional<MatrixFamily> matrix_family_from_string(const std::string& s) {
  if (s == "identity") return MatrixFamily::Identity;
  if (s == "monomial") return MatrixFamily::Monomial;
  if (s == "genperm") return MatrixFamily::GenPerm;
  if (s == "rankone") return MatrixFamily::RankOne;
  if (s == "c2") return MatrixFamily::C2;
  if (s == "dense") return MatrixFamily::Dense;
  return std::nullopt;
}

namespace detail {

inline std::vector<std::size_t> random_permutation(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

inline Cx random_unimodular(SplitMix64& rng, Field f) {
  return f == Field::Real ? Cx(rng.coin() ? 1.0 : -1.0, 0.0) : rng.unit_phase();
}

}  // namespace detail

/// Deterministic seeded generator for the test corpora families.
inline Matrix gen_matrix(MatrixFamily family, std::size_t n, Field f, std::uint64_t seed) {
  if (family == MatrixFamily::C2 && n != 2)
    throw std::invalid_argument("family c2 requires n = 2");
  if (n == 0) throw std::invalid_argument("n must be positive");
  SplitMix64 rng(SplitMix64::mix(seed, 0xFA817ULL));

  switch (family) {
    case MatrixFamily::Identity:
      return Matrix::identity(n, f);

    case MatrixFamily::Monomial: {
      Matrix m = Matrix::zero(n, f);
      const auto p = detail::random_permutation(rng, n);
      for (std::size_t i = 0; i < n; ++i)
        m.set(i, p[i], rng.log_uniform(0.1, 10.0) * detail::random_unimodular(rng, f));
      return m;
    }

    case MatrixFamily::GenPerm: {
      Matrix m = Matrix::zero(n, f);
      const auto p = detail::random_permutation(rng, n);
      const double gamma = rng.log_uniform(0.1, 10.0);
      for (std::size_t i = 0; i < n; ++i)
        m.set(i, p[i], gamma * detail::random_unimodular(rng, f));
      return m;
    }

    case MatrixFamily::RankOne: {
      Matrix m = Matrix::zero(n, f);
      std::vector<Cx> u(n), v(n);
      for (auto& z : u) z = rng.log_uniform(0.1, 10.0) * detail::random_unimodular(rng, f);
      for (auto& z : v) z = rng.log_uniform(0.1, 10.0) * detail::random_unimodular(rng, f);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, v[i] * u[j]);
      return m;
    }

    case MatrixFamily::C2: {
      const double gamma = rng.log_uniform(0.1, 10.0);
      const double bm = rng.uniform(0.1, 0.9);
      const Cx beta = f == Field::Real ? Cx(rng.coin() ? bm : -bm, 0.0)
                                       : bm * rng.unit_phase();
      Matrix q = Matrix::zero(2, f);
      const bool diag = rng.coin();
      const Cx q1 = detail::random_unimodular(rng, f), q2 = detail::random_unimodular(rng, f);
      if (diag) {
        q.set(0, 0, q1);
        q.set(1, 1, q2);
      } else {
        q.set(0, 1, q1);
        q.set(1, 0, q2);
      }
      Matrix c = Matrix::zero(2, f);
      c.set(0, 0, Cx(1, 0));
      c.set(1, 1, Cx(1, 0));
      c.set(0, 1, beta);
      c.set(1, 0, std::conj(beta));
      Matrix m = c * q;
      Matrix out = Matrix::zero(2, f);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out.set(i, j, gamma * m(i, j));
      return out;
    }

    case MatrixFamily::Dense: {
      Matrix m = Matrix::zero(n, f);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m.set(i, j, rng.log_uniform(0.1, 10.0) * detail::random_unimodular(rng, f));
      return m;
    }
  }
  throw std::invalid_argument("unknown matrix family");
}

}  // namespace normpar
