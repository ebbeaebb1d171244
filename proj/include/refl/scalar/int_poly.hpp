#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace refl {

// Dense univariate polynomial over Z, lowest degree first.
// Invariant: the zero polynomial stores no coefficients, otherwise the top
// coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly one() { return constant(1); }
  static IntPoly monomial(const mpz_class& c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& lc() const { return c_.back(); }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  // Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;
  // Multiply by v^k; for k < 0 the low coefficients must be zero.
  IntPoly shifted(int k) const;

  mpz_class content() const;
  mpz_class max_norm() const;
  mpz_class evaluate(const mpz_class& x) const;
  IntPoly divexact(const mpz_class& d) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& s);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "v") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Primitive part with positive leading coefficient; zero maps to zero.
IntPoly primitive_part(const IntPoly& p);

// Quotient a / b if b divides a exactly in Z[v], otherwise nullopt.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Greatest common divisor of the primitive parts: primitive, positive leading
// coefficient. Heuristic integer-evaluation gcd with a primitive PRS fallback.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Primitive remainder sequence gcd only; kept separate so tests can compare routes.
IntPoly gcd_prs(const IntPoly& a, const IntPoly& b);

}  // namespace refl
