#include "refl/scalar/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace refl {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  if (degree < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
  IntPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, mpz_class(0));
  p.c_.back() = c;
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  auto drop = static_cast<std::size_t>(-k);
  if (valuation() < drop) throw std::domain_error("IntPoly::shifted: not divisible by v^k");
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end());
  return r;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class IntPoly::max_norm() const {
  mpz_class m = 0;
  for (const auto& a : c_)
    if (mpz_cmpabs(a.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(a);
  return m;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

IntPoly IntPoly::divexact(const mpz_class& d) const {
  IntPoly r = *this;
  for (auto& a : r.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= s;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    os << mpz_class(abs(c_[i])).get_str();
    if (i > 0) os << "*" << var << "^" << i;
    first = false;
  }
  return os.str();
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.lc() < 0) c = -c;
  return c == 1 ? p : p.divexact(c);
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  if (b.is_one()) return a;
  // Cheap necessary condition on the constant terms.
  if (b[0] != 0 && a[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t()))
    return std::nullopt;

  std::vector<mpz_class> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<mpz_class> quot(rem.size() - db, mpz_class(0));
  mpz_class qk;
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(), b[j].get_mpz_t());
    quot[k] = qk;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const mpz_class& l = b.lc();
  int steps = a.degree() - b.degree() + 1;
  for (std::size_t top = r.size(); top-- > db;) {
    mpz_class t = r[top];
    for (auto& x : r) x *= l;
    for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * b[j];
    --steps;
  }
  IntPoly rem(std::move(r));
  if (steps > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(steps));
    rem *= f;
  }
  return rem;
}

IntPoly gcd_prs(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return IntPoly::one();
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

namespace {

// Symmetric base-xi digits of g, i.e. the polynomial whose value at xi is g.
IntPoly interpolate_digits(mpz_class g, const mpz_class& xi) {
  std::vector<mpz_class> digits;
  mpz_class half = xi / 2, d;
  while (g != 0) {
    mpz_fdiv_r(d.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    if (d > half) d -= xi;
    digits.push_back(d);
    g -= d;
    mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
  }
  return IntPoly(std::move(digits));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return IntPoly::one();
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x == y) return x;

  const mpz_class bound = std::min(x.max_norm(), y.max_norm());
  mpz_class xi = 2 * bound + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class ea = x.evaluate(xi), eb = y.evaluate(xi);
    if (ea != 0 && eb != 0) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
      IntPoly cand = primitive_part(interpolate_digits(g, xi));
      if (!cand.is_zero() && divide_exact(x, cand) && divide_exact(y, cand)) return cand;
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return gcd_prs(x, y);
}

}  // namespace refl
