#pragma once

#include "refl/verify/checks.hpp"

namespace refl::detail {

// AB - c BA
template <class S>
Matrix<S> qcomm(const Matrix<S>& a, const Matrix<S>& b, const S& c) {
  return a * b - c * (b * a);
}

template <class S>
Matrix<S> comm(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

// Expanded [a, sum(bs)]_c as the list of products a b and -c b a. Keeping the
// products separate lets numeric residuals be normalized by term size.
template <class S>
std::vector<Matrix<S>> qcomm_terms(const Matrix<S>& a, const std::vector<Matrix<S>>& bs, const S& c) {
  std::vector<Matrix<S>> r;
  for (const auto& b : bs) {
    r.push_back(a * b);
    r.push_back(-(c * (b * a)));
  }
  return r;
}

template <class S>
std::vector<Matrix<S>> scaled(const S& c, std::vector<Matrix<S>> ms) {
  for (auto& m : ms) m = c * m;
  return ms;
}

template <class S>
std::vector<Matrix<S>> concat(std::vector<Matrix<S>> a, const std::vector<Matrix<S>>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class Field>
Matrix<ScalarOf<Field>> qh(const Field& f, const Irrep<ScalarOf<Field>>& rep, HalfInt xi) {
  return cartan_power(f, rep, xi);
}

template <class S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
  const std::size_t n = a.size(), m = b.size();
  Matrix<S> r(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r(n + i, n + j) = b(i, j);
  return r;
}

}  // namespace refl::detail

#define REFL_INSTANTIATE(macro) \
  macro(ExactField)             \
  macro(NumericField)
