#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace refl {

// Parses "p/r" or "p" with decimal integers and an optional sign.
// Throws std::invalid_argument on malformed input or a zero denominator.
mpq_class parse_rational(const std::string& text);

// Parses "a", "a+bi", "a-bi", "bi" with decimal floats.
std::complex<double> parse_complex(const std::string& text);

}  // namespace refl
