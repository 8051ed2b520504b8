#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace normpar {

using Cx = std::complex<double>;

enum class Field { Real, Complex };

struct FieldMismatchError : std::invalid_argument {
  explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatchError : std::invalid_argument {
  explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroVectorError : std::invalid_argument {
  explicit ZeroVectorError(const std::string& what) : std::invalid_argument(what) {}
};

struct HypothesisViolatedError : std::invalid_argument {
  explicit HypothesisViolatedError(const std::string& what) : std::invalid_argument(what) {}
};

struct WitnessNotFoundError : std::runtime_error {
  explicit WitnessNotFoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Relative tolerances used by every comparison in the library.
/// eps_eq governs scalar and norm equality, eps_peak membership in a
/// peak set, eps_rank pivot acceptance during elimination.
struct Tolerance {
  double eps_eq = 1e-9;
  double eps_peak = 1e-9;
  double eps_rank = 1e-9;

  Tolerance() = default;
  Tolerance(double eq, double peak, double rank_eps)
      : eps_eq(eq), eps_peak(peak), eps_rank(rank_eps) {
    validate();
  }
  explicit Tolerance(double eps) : Tolerance(eps, eps, eps) {}

  void validate() const {
    for (double e : {eps_eq, eps_peak, eps_rank}) {
      if (!(e > 0.0) || !(e < 1e-3))
        throw std::invalid_argument("tolerance must satisfy 0 < eps < 1e-3");
    }
  }
};

/// A field-tagged number. Real-tagged values have exactly zero
/// imaginary part; this is enforced at construction, not tolerated as drift.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Cx v, Field f) : v_(v), field_(f) {
    if (f == Field::Real && v.imag() != 0.0)
      throw FieldMismatchError("real scalar constructed with nonzero imaginary part");
  }
  static Scalar real(double re) { return Scalar(Cx(re, 0.0), Field::Real); }
  static Scalar complex(double re, double im) { return Scalar(Cx(re, im), Field::Complex); }

  Cx value() const { return v_; }
  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }
  Field field() const { return field_; }
  double abs() const { return std::abs(v_); }
  Scalar conj() const { return Scalar(std::conj(v_), field_); }

 private:
  Cx v_{0.0, 0.0};
  Field field_ = Field::Real;
};

inline bool approx_eq(Cx a, Cx b, const Tolerance& tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol.eps_eq * scale;
}

inline bool approx_eq(double a, double b, const Tolerance& tol) {
  return approx_eq(Cx(a, 0.0), Cx(b, 0.0), tol);
}

/// |a - b| <= eps_eq * max(1, |a|, |b|). Fields must agree.
inline bool approx_eq(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  if (a.field() != b.field())
    throw FieldMismatchError("approx_eq: scalars from different fields");
  return approx_eq(a.value(), b.value(), tol);
}

inline bool is_nonneg_real(Cx a, const Tolerance& tol) {
  const double scale = std::max(1.0, std::abs(a));
  return std::abs(a.imag()) <= tol.eps_eq * scale && a.real() >= -tol.eps_eq * scale;
}

/// True iff a lies on the closed nonnegative real ray, up to eps_eq.
inline bool is_nonneg_real(const Scalar& a, const Tolerance& tol) {
  return is_nonneg_real(a.value(), tol);
}

/// Dense column vector over R^n or C^n. All entries share the field tag;
/// a Real vector holds exactly zero imaginary parts.
class Vector {
 public:
  Vector(std::vector<Cx> entries, Field f) : e_(std::move(entries)), field_(f) {
    if (e_.empty()) throw std::invalid_argument("vector dimension must be positive");
    if (f == Field::Real)
      for (const Cx& z : e_)
        if (z.imag() != 0.0)
          throw FieldMismatchError("real vector entry with nonzero imaginary part");
  }
  static Vector zero(std::size_t dim, Field f) {
    return Vector(std::vector<Cx>(dim, Cx(0.0, 0.0)), f);
  }
  static Vector basis(std::size_t dim, std::size_t j, Field f) {
    Vector v = zero(dim, f);
    v.e_.at(j) = Cx(1.0, 0.0);
    return v;
  }
  static Vector from_reals(std::initializer_list<double> xs, Field f = Field::Real) {
    std::vector<Cx> e;
    for (double x : xs) e.emplace_back(x, 0.0);
    return Vector(std::move(e), f);
  }

  std::size_t dim() const { return e_.size(); }
  Field field() const { return field_; }
  const Cx& operator[](std::size_t k) const { return e_[k]; }
  Scalar at(std::size_t k) const { return Scalar(e_.at(k), field_); }
  const std::vector<Cx>& entries() const { return e_; }

  double max_abs() const {
    double m = 0.0;
    for (const Cx& z : e_) m = std::max(m, std::abs(z));
    return m;
  }
  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Cx& z) { return z == Cx(0.0, 0.0); });
  }

  friend Vector operator+(const Vector& a, const Vector& b) {
    check_compatible(a, b);
    std::vector<Cx> e(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) e[k] = a.e_[k] + b.e_[k];
    return Vector(std::move(e), a.field_);
  }
  friend Vector operator-(const Vector& a, const Vector& b) {
    check_compatible(a, b);
    std::vector<Cx> e(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) e[k] = a.e_[k] - b.e_[k];
    return Vector(std::move(e), a.field_);
  }

  /// Scale by an arbitrary scalar; the result is tagged Complex unless the
  /// factor is real, in which case the field tag is kept.
  Vector scaled(Cx factor) const {
    std::vector<Cx> e(dim());
    for (std::size_t k = 0; k < dim(); ++k) e[k] = factor * e_[k];
    const Field f = (field_ == Field::Real && factor.imag() == 0.0) ? Field::Real : Field::Complex;
    return Vector(std::move(e), f);
  }

  static void check_compatible(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim())
      throw DimensionMismatchError("vectors of different dimension");
    if (a.field_ != b.field_)
      throw FieldMismatchError("vectors from different fields");
  }

 private:
  std::vector<Cx> e_;
  Field field_;
};

/// Square dense matrix, row major, field-tagged like Vector.
class Matrix {
 public:
  Matrix(std::vector<Cx> data, std::size_t n, Field f)
      : data_(std::move(data)), n_(n), field_(f) {
    if (n_ == 0 || data_.size() != n_ * n_)
      throw DimensionMismatchError("matrix data does not form an n x n grid");
    if (f == Field::Real)
      for (const Cx& z : data_)
        if (z.imag() != 0.0)
          throw FieldMismatchError("real matrix entry with nonzero imaginary part");
  }
  static Matrix zero(std::size_t n, Field f) {
    return Matrix(std::vector<Cx>(n * n, Cx(0.0, 0.0)), n, f);
  }
  static Matrix identity(std::size_t n, Field f) {
    Matrix m = zero(n, f);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Cx(1.0, 0.0));
    return m;
  }
  static Matrix from_rows(std::vector<std::vector<Cx>> rows, Field f) {
    const std::size_t n = rows.size();
    std::vector<Cx> data;
    data.reserve(n * n);
    for (const auto& r : rows) {
      if (r.size() != n) throw DimensionMismatchError("matrix is not square");
      data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(data), n, f);
  }
  static Matrix from_reals(std::initializer_list<std::initializer_list<double>> rows,
                           Field f = Field::Real) {
    std::vector<std::vector<Cx>> rs;
    for (const auto& r : rows) {
      std::vector<Cx> row;
      for (double x : r) row.emplace_back(x, 0.0);
      rs.push_back(std::move(row));
    }
    return from_rows(std::move(rs), f);
  }

  std::size_t dim() const { return n_; }
  Field field() const { return field_; }
  const Cx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Cx v) {
    if (field_ == Field::Real && v.imag() != 0.0)
      throw FieldMismatchError("real matrix entry with nonzero imaginary part");
    data_.at(i * n_ + j) = v;
  }
  const std::vector<Cx>& data() const { return data_; }

  double max_abs_entry() const {
    double m = 0.0;
    for (const Cx& z : data_) m = std::max(m, std::abs(z));
    return m;
  }
  bool is_zero() const { return max_abs_entry() == 0.0; }

  Vector apply(const Vector& x) const {
    if (x.dim() != n_) throw DimensionMismatchError("matrix/vector dimension mismatch");
    if (x.field() != field_) throw FieldMismatchError("matrix/vector field mismatch");
    std::vector<Cx> e(n_, Cx(0.0, 0.0));
    for (std::size_t i = 0; i < n_; ++i) {
      Cx acc(0.0, 0.0);
      for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * x[j];
      e[i] = acc;
    }
    return Vector(std::move(e), field_);
  }

  Matrix transpose() const {
    Matrix t = zero(n_, field_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t.set(j, i, (*this)(i, j));
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw DimensionMismatchError("matrix product dimension mismatch");
    if (a.field_ != b.field_) throw FieldMismatchError("matrix product field mismatch");
    Matrix c = zero(a.n_, a.field_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const Cx aik = a(i, k);
        if (aik == Cx(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c.data_[i * a.n_ + j] += aik * b(k, j);
      }
    return c;
  }

 private:
  std::vector<Cx> data_;
  std::size_t n_;
  Field field_;
};

/// Numerical rank by row elimination with full pivoting. A pivot is
/// accepted iff its modulus exceeds eps_rank times the largest entry
/// magnitude of the input matrix.
inline std::size_t rank(const Matrix& t, const Tolerance& tol) {
  const std::size_t n = t.dim();
  std::vector<Cx> a(t.data());
  const double scale = t.max_abs_entry();
  if (scale == 0.0) return 0;
  const double thresh = tol.eps_rank * scale;

  std::vector<std::size_t> rows(n), cols(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  auto at = [&](std::size_t i, std::size_t j) -> Cx& { return a[rows[i] * n + cols[j]]; };

  std::size_t r = 0;
  while (r < n) {
    std::size_t pi = r, pj = r;
    double best = 0.0;
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = r; j < n; ++j) {
        const double m = std::abs(at(i, j));
        if (m > best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (best <= thresh) break;
    std::swap(rows[r], rows[pi]);
    std::swap(cols[r], cols[pj]);
    const Cx pivot = at(r, r);
    for (std::size_t i = r + 1; i < n; ++i) {
      const Cx f = at(i, r) / pivot;
      if (f == Cx(0.0, 0.0)) continue;
      for (std::size_t j = r; j < n; ++j) at(i, j) -= f * at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace normpar
