#include "refl/scalar/rational_parse.hpp"

#include <regex>
#include <stdexcept>

namespace refl {

mpq_class parse_rational(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?)(\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("not a rational number: '" + text + "'");
  mpz_class num(m[2].str(), 10);
  mpz_class den = m[3].matched ? mpz_class(m[3].str(), 10) : mpz_class(1);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  if (m[1].str() == "-") num = -num;
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

std::complex<double> parse_complex(const std::string& text) {
  static const std::string num = R"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_only("^\\s*(" + num + ")\\s*$");
  static const std::regex imag_only("^\\s*(" + num + ")\\s*[ij]\\s*$");
  static const std::regex both("^\\s*(" + num + ")\\s*([+-])\\s*((?:\\d+\\.?\\d*|\\.\\d+)(?:[eE][+-]?\\d+)?)\\s*[ij]\\s*$");
  std::smatch m;
  if (std::regex_match(text, m, real_only)) return {std::stod(m[1].str()), 0.0};
  if (std::regex_match(text, m, imag_only)) return {0.0, std::stod(m[1].str())};
  if (std::regex_match(text, m, both)) {
    double im = std::stod(m[3].str());
    return {std::stod(m[1].str()), m[2].str() == "-" ? -im : im};
  }
  throw std::invalid_argument("not a complex number: '" + text + "'");
}

}  // namespace refl
