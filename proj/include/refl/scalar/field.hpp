#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "refl/scalar/rational_function.hpp"

namespace refl {

using Complex = std::complex<double>;

// Integer power by repeated squaring; negative exponents invert.
inline Complex ipow(Complex base, int k) {
  if (k < 0) return 1.0 / ipow(base, -k);
  Complex r = 1.0;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}
inline RationalFunction ipow(const RationalFunction& base, int k) { return base.pow(k); }

inline double magnitude(const Complex& z) { return std::abs(z); }
inline bool is_zero(const Complex& z) { return z == 0.0; }

// Exact backend: scalars are elements of Q(v), v = q^{1/2}, q symbolic.
class ExactField {
 public:
  using Scalar = RationalFunction;
  static constexpr bool exact = true;

  Scalar zero() const { return {}; }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long c) const { return Scalar(c); }
  Scalar from_rational(const mpq_class& c) const { return Scalar(c); }
  // q^{k/2}
  Scalar v_power(int k) const { return RationalFunction::v_power(k); }
  Scalar q_power(int k) const { return v_power(2 * k); }
  bool is_zero(const Scalar& s) const { return s.is_zero(); }
  std::string describe() const { return "exact"; }
};

// Numeric backend: complex doubles at a fixed q with |q| > 1.
class NumericField {
 public:
  using Scalar = Complex;
  static constexpr bool exact = false;

  explicit NumericField(Complex q, double truncation_tol = 1e-14, int max_terms = 10000)
      : q_(q), v_(std::sqrt(q)), tol_(truncation_tol), max_terms_(max_terms) {
    if (!(std::abs(q) > 1.0)) throw std::invalid_argument("numeric backend requires |q| > 1");
    if (!(truncation_tol > 0.0)) throw std::invalid_argument("numeric backend requires truncation_tol > 0");
    if (max_terms <= 0) throw std::invalid_argument("numeric backend requires max_terms > 0");
  }

  Scalar zero() const { return 0.0; }
  Scalar one() const { return 1.0; }
  Scalar from_int(long c) const { return static_cast<double>(c); }
  Scalar from_rational(const mpq_class& c) const { return c.get_d(); }
  Scalar v_power(int k) const { return ipow(v_, k); }
  Scalar q_power(int k) const { return ipow(q_, k); }
  bool is_zero(const Scalar& s) const { return s == 0.0; }

  Complex q() const { return q_; }
  Complex v() const { return v_; }
  double truncation_tol() const { return tol_; }
  int max_terms() const { return max_terms_; }
  std::string describe() const;

 private:
  Complex q_;
  Complex v_;
  double tol_;
  int max_terms_;
};

// Spectral parameter x. In the exact backend x = q^m is carried by its exponent;
// the numeric backend accepts any nonzero complex x.
template <class S>
class Spectral {
 public:
  template <class Field>
  static Spectral from_q_exponent(const Field& f, int m) {
    return Spectral(f.q_power(m), m);
  }
  static Spectral from_value(S x) {
    if (x == S(0)) throw std::invalid_argument("spectral parameter must be nonzero");
    return Spectral(std::move(x), std::nullopt);
  }

  const S& value() const { return value_; }
  const std::optional<int>& q_exponent() const { return q_exp_; }

  Spectral pow(int k) const {
    return Spectral(ipow(value_, k), q_exp_ ? std::optional<int>(*q_exp_ * k) : std::nullopt);
  }
  Spectral inverse() const { return pow(-1); }
  friend Spectral operator*(const Spectral& a, const Spectral& b) {
    std::optional<int> e;
    if (a.q_exp_ && b.q_exp_) e = *a.q_exp_ + *b.q_exp_;
    return Spectral(a.value_ * b.value_, e);
  }
  friend Spectral operator/(const Spectral& a, const Spectral& b) { return a * b.inverse(); }

 private:
  Spectral(S value, std::optional<int> e) : value_(std::move(value)), q_exp_(e) {}
  S value_;
  std::optional<int> q_exp_;
};

// A denominator factor vanished: the parameters collide with a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A truncated infinite product or series failed to reach tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace refl
