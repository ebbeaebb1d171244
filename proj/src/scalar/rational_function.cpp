#include "refl/scalar/rational_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace refl {

RationalFunction::RationalFunction() : scale_(0), num_(IntPoly::one()), den_(IntPoly::one()) {}

RationalFunction::RationalFunction(long c) : RationalFunction(mpq_class(c)) {}

RationalFunction::RationalFunction(const mpq_class& c)
    : scale_(c), num_(IntPoly::one()), den_(IntPoly::one()) {}

RationalFunction::RationalFunction(mpq_class scale, IntPoly num, IntPoly den, int shift)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)), shift_(shift) {}

RationalFunction::RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den) : RationalFunction() {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) return;
  auto n = num.split();
  auto d = den.split();
  IntPoly g = gcd(n.poly, d.poly);
  if (g.is_one()) {
    num_ = std::move(n.poly);
    den_ = std::move(d.poly);
  } else {
    num_ = *divide_exact(n.poly, g);
    den_ = *divide_exact(d.poly, g);
  }
  scale_ = n.scale / d.scale;
  shift_ = n.shift - d.shift;
}

RationalFunction RationalFunction::v_power(int k) {
  return RationalFunction(mpq_class(1), IntPoly::one(), IntPoly::one(), k);
}

void RationalFunction::normalize_poly(IntPoly& p, int& shift_acc, mpq_class& scale_acc) {
  auto val = p.valuation();
  if (val > 0) {
    p = p.shifted(-static_cast<int>(val));
    shift_acc += static_cast<int>(val);
  }
  mpz_class c = p.content();
  if (p.lc() < 0) c = -c;
  if (c != 1) {
    p = p.divexact(c);
    scale_acc *= c;
  }
}

LaurentPolynomial RationalFunction::numerator() const {
  if (is_zero()) return {};
  mpq_class c = scale_ / mpq_class(den_.lc());
  return LaurentPolynomial::from_int_poly(num_, c, shift_);
}

LaurentPolynomial RationalFunction::denominator() const {
  return LaurentPolynomial::from_int_poly(den_, mpq_class(1) / mpq_class(den_.lc()), 0);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(1 / scale_, den_, num_, -shift_);
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction result(1), base = *this;
  if (num_.is_one() && den_.is_one()) {
    mpq_class s;
    mpz_pow_ui(s.get_num_mpz_t(), scale_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(s.get_den_mpz_t(), scale_.get_den_mpz_t(), static_cast<unsigned long>(k));
    return RationalFunction(s, IntPoly::one(), IntPoly::one(), shift_ * k);
  }
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  scale_ *= o.scale_;
  shift_ += o.shift_;
  if (o.num_.is_one() && o.den_.is_one()) return *this;
  if (num_.is_one() && den_.is_one()) {
    num_ = o.num_;
    den_ = o.den_;
    return *this;
  }
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  IntPoly n1 = g1.is_one() ? num_ : *divide_exact(num_, g1);
  IntPoly d2 = g1.is_one() ? o.den_ : *divide_exact(o.den_, g1);
  IntPoly n2 = g2.is_one() ? o.num_ : *divide_exact(o.num_, g2);
  IntPoly d1 = g2.is_one() ? den_ : *divide_exact(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  const int shift = std::min(shift_, o.shift_);
  IntPoly a = num_.shifted(shift_ - shift);
  IntPoly b = o.num_.shifted(o.shift_ - shift);
  a *= scale_.get_num() * o.scale_.get_den();
  b *= o.scale_.get_num() * scale_.get_den();
  mpq_class scale(mpz_class(1), scale_.get_den() * o.scale_.get_den());

  IntPoly den;
  IntPoly common;  // gcd of the two denominators
  if (den_ == o.den_) {
    common = den_;
    den = den_;
    a += b;
  } else {
    common = gcd(den_, o.den_);
    IntPoly rest_o = common.is_one() ? o.den_ : *divide_exact(o.den_, common);
    IntPoly rest_s = common.is_one() ? den_ : *divide_exact(den_, common);
    a = a * rest_o;
    a += b * rest_s;
    den = den_ * rest_o;
  }
  if (a.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  int new_shift = shift;
  normalize_poly(a, new_shift, scale);
  if (!common.is_one()) {
    IntPoly g = gcd(a, common);
    if (!g.is_one()) {
      a = *divide_exact(a, g);
      den = *divide_exact(den, g);
    }
  }
  scale_ = scale;
  scale_.canonicalize();
  num_ = std::move(a);
  den_ = std::move(den);
  shift_ = new_shift;
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

namespace {

long max_bits(const IntPoly& p) {
  long m = 0;
  for (const auto& c : p.coeffs()) m = std::max<long>(m, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
  return m;
}

std::complex<double> horner(const IntPoly& p, std::complex<double> v, long scale_bits) {
  std::complex<double> r = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, p[i].get_mpz_t());
    r = r * v + std::ldexp(d, static_cast<int>(e - scale_bits));
  }
  return r;
}

}  // namespace

std::complex<double> RationalFunction::evaluate(std::complex<double> v) const {
  if (is_zero()) return 0.0;
  long bits = std::max(max_bits(num_), max_bits(den_));
  std::complex<double> n = horner(num_, v, bits), d = horner(den_, v, bits);
  return scale_.get_d() * n / d * std::pow(v, shift_);
}

std::string RationalFunction::to_string() const {
  return numerator().to_string() + " / " + denominator().to_string();
}

RationalFunction RationalFunction::parse(const std::string& text) {
  auto slash = text.find(" / ");
  if (slash == std::string::npos) return RationalFunction(LaurentPolynomial::parse(text), LaurentPolynomial(mpq_class(1)));
  return RationalFunction(LaurentPolynomial::parse(text.substr(0, slash)), LaurentPolynomial::parse(text.substr(slash + 3)));
}

}  // namespace refl
