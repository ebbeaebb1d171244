#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "refl/matrix.hpp"
#include "refl/repr/params.hpp"
#include "refl/scalar/qseries.hpp"

namespace refl {

// n-dimensional irreducible U_q(sl2) module in the weight basis v_0..v_{n-1},
// highest weight first: H v_k = (n-1-2k) v_k, E v_k = [k] v_{k-1},
// F v_k = [n-1-k] v_{k+1}.
template <class S>
struct Irrep {
  int dim = 0;
  Matrix<S> E;
  Matrix<S> F;
  std::vector<int> weights;
};

template <class Field>
Irrep<typename Field::Scalar> make_irrep(const Field& f, int n) {
  using S = typename Field::Scalar;
  if (n < 1) throw std::invalid_argument("make_irrep: dimension must be positive");
  Irrep<S> rep;
  rep.dim = n;
  rep.E = Matrix<S>(static_cast<std::size_t>(n));
  rep.F = Matrix<S>(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rep.weights.push_back(n - 1 - 2 * k);
  for (int k = 1; k < n; ++k) rep.E(k - 1, k) = q_number(f, k);
  for (int k = 0; k + 1 < n; ++k) rep.F(k + 1, k) = q_number(f, n - 1 - k);
  return rep;
}

// diag(fn(h)) over the weights of rep.
template <class S, class Fn>
Matrix<S> weight_diagonal(const Irrep<S>& rep, Fn&& fn) {
  Matrix<S> m(static_cast<std::size_t>(rep.dim));
  for (std::size_t k = 0; k < rep.weights.size(); ++k) m(k, k) = fn(rep.weights[k]);
  return m;
}

// q^{xi H}
template <class Field>
Matrix<typename Field::Scalar> cartan_power(const Field& f, const Irrep<typename Field::Scalar>& rep, HalfInt xi) {
  return weight_diagonal(rep, [&](int h) { return f.v_power(xi.twice * h); });
}

// Numeric q^{xi H} for arbitrary real xi, principal branch of log q.
inline Matrix<Complex> cartan_power(const NumericField& f, const Irrep<Complex>& rep, double xi) {
  const Complex logq = std::log(f.q());
  return weight_diagonal(rep, [&](int h) { return std::exp(xi * static_cast<double>(h) * logq); });
}

// x^{c H}
template <class S>
Matrix<S> spectral_cartan(const Irrep<S>& rep, const Spectral<S>& x, int c) {
  return weight_diagonal(rep, [&](int h) { return x.pow(c * h).value(); });
}

// C = FE + (q^{H+1} + q^{-H-1}) / (q - q^{-1})^2
template <class Field>
Matrix<typename Field::Scalar> casimir(const Field& f, const Irrep<typename Field::Scalar>& rep) {
  const auto lam2 = ipow(f.q_power(1) - f.q_power(-1), 2);
  return rep.F * rep.E + weight_diagonal(rep, [&](int h) { return (f.q_power(h + 1) + f.q_power(-h - 1)) / lam2; });
}

// EF + (q^{H-1} + q^{-H+1}) / (q - q^{-1})^2, the second defining form.
template <class Field>
Matrix<typename Field::Scalar> casimir_ef_form(const Field& f, const Irrep<typename Field::Scalar>& rep) {
  const auto lam2 = ipow(f.q_power(1) - f.q_power(-1), 2);
  return rep.E * rep.F + weight_diagonal(rep, [&](int h) { return (f.q_power(h - 1) + f.q_power(-h + 1)) / lam2; });
}

// Scalar by which C acts on the n-dimensional irrep: (q^n + q^{-n}) / (q - q^{-1})^2.
template <class Field>
typename Field::Scalar casimir_value(const Field& f, int n) {
  return (f.q_power(n) + f.q_power(-n)) / ipow(f.q_power(1) - f.q_power(-1), 2);
}

}  // namespace refl
