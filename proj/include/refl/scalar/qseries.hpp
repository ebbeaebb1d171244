#pragma once

#include <string>

#include "refl/scalar/field.hpp"

namespace refl {

// (k)_b = 1 + b + ... + b^{k-1} = (1 - b^k)/(1 - b)
template <class Field>
typename Field::Scalar q_integer(const Field& f, const typename Field::Scalar& base, int k) {
  if (k < 0) throw std::invalid_argument("q_integer: k must be nonnegative");
  typename Field::Scalar sum = f.zero(), term = f.one();
  for (int j = 0; j < k; ++j) {
    sum += term;
    term *= base;
  }
  return sum;
}

template <class Field>
typename Field::Scalar q_integer(const Field& f, int k) {
  return q_integer(f, f.q_power(1), k);
}

// (k)_b! = (1)_b (2)_b ... (k)_b, (0)_b! = 1
template <class Field>
typename Field::Scalar q_factorial(const Field& f, const typename Field::Scalar& base, int k) {
  if (k < 0) throw std::invalid_argument("q_factorial: k must be nonnegative");
  typename Field::Scalar r = f.one();
  for (int j = 2; j <= k; ++j) r *= q_integer(f, base, j);
  return r;
}

template <class Field>
typename Field::Scalar q_factorial(const Field& f, int k) {
  return q_factorial(f, f.q_power(1), k);
}

// Symmetric q-number [m] = (q^m - q^{-m}) / (q - q^{-1}).
template <class Field>
typename Field::Scalar q_number(const Field& f, int m) {
  return (f.q_power(m) - f.q_power(-m)) / (f.q_power(1) - f.q_power(-1));
}

// (a; step)_k = prod_{j<k} (1 - a step^j)
template <class Field>
typename Field::Scalar poch_finite(const Field& f, const typename Field::Scalar& a,
                                   const typename Field::Scalar& step, int k) {
  if (k < 0) throw std::invalid_argument("poch_finite: k must be nonnegative");
  typename Field::Scalar r = f.one(), x = a;
  for (int j = 0; j < k; ++j) {
    r *= f.one() - x;
    x *= step;
  }
  return r;
}

// (A q^t; q^{-2})_inf / (A q^{-t}; q^{-2})_inf, which telescopes to
// prod_{j<t} (1 - A q^{t-2j}) for t >= 0 and the reciprocal of the |t| product otherwise.
template <class Field>
typename Field::Scalar poch_ratio_telescoped(const Field& f, const typename Field::Scalar& A, int t) {
  const int n = t < 0 ? -t : t;
  typename Field::Scalar prod = f.one();
  for (int j = 0; j < n; ++j) {
    auto factor = f.one() - A * f.q_power(n - 2 * j);
    if (t < 0 && f.is_zero(factor))
      throw PoleError("poch_ratio_telescoped: denominator factor j=" + std::to_string(j) + " (1 - A q^" +
                      std::to_string(n - 2 * j) + ") vanishes");
    prod *= factor;
  }
  return t < 0 ? f.one() / prod : prod;
}

// (a; step)_inf truncated once |a step^j| < truncation_tol.
inline Complex poch_infinite_truncated(const NumericField& f, Complex a, Complex step) {
  if (!(std::abs(step) < 1.0)) throw std::invalid_argument("poch_infinite_truncated: requires |step| < 1");
  Complex r = 1.0, x = a;
  for (int j = 0; j < f.max_terms(); ++j) {
    if (std::abs(x) < f.truncation_tol()) return r;
    r *= 1.0 - x;
    x *= step;
  }
  throw ConvergenceError("poch_infinite_truncated: max_terms reached before tolerance");
}

// (A w; q^{-2})_inf / (A w^{-1}; q^{-2})_inf for a spectral power w.
inline RationalFunction inf_poch_ratio(const ExactField& f, const RationalFunction& A,
                                       const Spectral<RationalFunction>& w) {
  if (!w.q_exponent())
    throw std::invalid_argument("exact backend needs the spectral power as an integer power of q");
  return poch_ratio_telescoped(f, A, *w.q_exponent());
}

inline Complex inf_poch_ratio(const NumericField& f, const Complex& A, const Spectral<Complex>& w) {
  const Complex step = f.q_power(-2);
  Complex den = poch_infinite_truncated(f, A / w.value(), step);
  if (den == 0.0) throw PoleError("inf_poch_ratio: denominator product vanishes");
  return poch_infinite_truncated(f, A * w.value(), step) / den;
}

}  // namespace refl
