#include "refl/scalar/laurent.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

#include "refl/scalar/rational_parse.hpp"

namespace refl {

LaurentPolynomial::LaurentPolynomial(const mpq_class& c) { add_term(0, c); }

LaurentPolynomial::LaurentPolynomial(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const mpq_class& c, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_int_poly(const IntPoly& p, const mpq_class& c, int shift) {
  LaurentPolynomial r;
  if (c == 0) return r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r.add_term(static_cast<int>(i) + shift, c * mpq_class(p[i]));
  return r;
}

void LaurentPolynomial::add_term(int e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("LaurentPolynomial: zero has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("LaurentPolynomial: zero has no exponents");
  return terms_.rbegin()->first;
}

mpq_class LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial::Split LaurentPolynomial::split() const {
  Split s;
  if (terms_.empty()) {
    s.scale = 0;
    return s;
  }
  s.shift = min_exponent();
  mpz_class den = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(max_exponent() - s.shift) + 1, mpz_class(0));
  for (const auto& [e, c] : terms_) {
    mpz_class v = c.get_num() * (den / c.get_den());
    coeffs[static_cast<std::size_t>(e - s.shift)] = v;
  }
  IntPoly p(std::move(coeffs));
  mpz_class cont = p.content();
  if (p.lc() < 0) cont = -cont;
  s.poly = p.divexact(cont);
  s.scale = mpq_class(cont, den);
  s.scale.canonicalize();
  return s;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    os << c.get_str() << "*v^" << e;
    first = false;
  }
  return os.str();
}

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
  static const std::regex term_re(R"(^\s*([+-]?\d+(?:/\d+)?)\s*\*\s*v\s*\^\s*([+-]?\d+)\s*$)");
  LaurentPolynomial r;
  std::string trimmed = text;
  if (trimmed.find_first_not_of(" \t") == std::string::npos)
    throw std::invalid_argument("LaurentPolynomial::parse: empty input");
  if (std::regex_match(trimmed, std::regex(R"(^\s*0\s*$)"))) return r;
  std::size_t pos = 0;
  while (pos <= trimmed.size()) {
    std::size_t next = trimmed.find(" + ", pos);
    std::string piece = trimmed.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch m;
    if (!std::regex_match(piece, m, term_re))
      throw std::invalid_argument("LaurentPolynomial::parse: bad term '" + piece + "'");
    r.add_term(std::stoi(m[2].str()), parse_rational(m[1].str()));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return r;
}

}  // namespace refl
