#pragma once

#include "refl/matrix.hpp"
#include "refl/scalar/field.hpp"

// Small constructors shared by the unit tests. Values are spelled out by hand so
// they stay independent of the library code under test.
namespace oracle {

using refl::Matrix;
using refl::RationalFunction;

inline RationalFunction q(int k = 1) { return RationalFunction::v_power(2 * k); }
inline RationalFunction r(long a, long b = 1) { return RationalFunction(mpq_class(a, b)); }

inline Matrix<RationalFunction> diag(std::initializer_list<RationalFunction> d) {
  Matrix<RationalFunction> m(d.size());
  std::size_t i = 0;
  for (const auto& x : d) m(i, i) = x, ++i;
  return m;
}

inline Matrix<RationalFunction> unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<RationalFunction> m(n);
  m(i, j) = RationalFunction(1);
  return m;
}

template <class S>
bool equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    if (!(a.entries()[k] == b.entries()[k])) return false;
  return true;
}

inline double max_diff(const Matrix<refl::Complex>& a, const Matrix<refl::Complex>& b) {
  double d = 0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

}  // namespace oracle
