#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "refl/scalar/int_poly.hpp"

namespace refl {

// Laurent polynomial in v = q^{1/2} with rational coefficients, stored sparsely.
// Invariant: no stored coefficient is zero.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, mpq_class>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const mpq_class& c);
  explicit LaurentPolynomial(Terms terms);
  static LaurentPolynomial monomial(const mpq_class& c, int exponent);
  // c * p(v) * v^shift
  static LaurentPolynomial from_int_poly(const IntPoly& p, const mpq_class& c = 1, int shift = 0);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int min_exponent() const;
  int max_exponent() const;
  mpq_class coefficient(int exponent) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  // Splits into c * p(v) * v^shift with p primitive, positive leading coefficient
  // and nonzero constant term. Zero yields c = 0.
  struct Split {
    mpq_class scale;
    IntPoly poly;
    int shift = 0;
  };
  Split split() const;

  // Terms "c*v^k" joined by " + ", highest exponent first; "0" when empty.
  std::string to_string() const;
  static LaurentPolynomial parse(const std::string& text);

 private:
  void add_term(int e, const mpq_class& c);
  Terms terms_;
};

}  // namespace refl
