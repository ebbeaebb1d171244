#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "refl/scalar/int_poly.hpp"
#include "refl/scalar/laurent.hpp"

namespace refl {

// Exact element of Q(v), v = q^{1/2}.
//
// Stored as scale * num(v) / den(v) * v^shift where num and den are primitive
// integer polynomials with positive leading coefficient, nonzero constant term
// and no common factor. This form is unique, so equality of representations is
// equality of functions. Zero has scale 0 and num = den = 1.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(long c);  // NOLINT(google-explicit-constructor): integer literals act as scalars
  explicit RationalFunction(const mpq_class& c);
  RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den);

  static RationalFunction v_power(int k);

  bool is_zero() const { return scale_ == 0; }
  bool is_one() const { return scale_ == 1 && shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent_polynomial() const { return den_.is_one(); }

  // Canonical fraction: denominator has leading coefficient 1 and lowest exponent 0.
  LaurentPolynomial numerator() const;
  LaurentPolynomial denominator() const;

  const mpq_class& scale() const { return scale_; }
  const IntPoly& num_poly() const { return num_; }
  const IntPoly& den_poly() const { return den_; }
  int shift() const { return shift_; }

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::complex<double> evaluate(std::complex<double> v) const;

  // "num / den" with num and den in LaurentPolynomial::to_string form.
  std::string to_string() const;
  static RationalFunction parse(const std::string& text);

 private:
  RationalFunction(mpq_class scale, IntPoly num, IntPoly den, int shift);
  void normalize_poly(IntPoly& p, int& shift_acc, mpq_class& scale_acc);

  mpq_class scale_;
  IntPoly num_;
  IntPoly den_;
  int shift_ = 0;
};

inline bool is_zero(const RationalFunction& a) { return a.is_zero(); }

}  // namespace refl
