#pragma once

#include <array>

#include "refl/repr/algebra.hpp"

namespace refl {

// 2x2 array of U_q(sl2) elements; entry [i][j] multiplies the matrix unit E_{i+1,j+1}.
template <class S>
using Blocks = std::array<std::array<AlgebraElement<S>, 2>, 2>;

// Entries of L(x) (bar = false) or Lbar(x) (bar = true).
template <class Field>
Blocks<typename Field::Scalar> l_blocks(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                        const Spectral<typename Field::Scalar>& x, bool bar) {
  using S = typename Field::Scalar;
  using A = AlgebraElement<S>;
  const S lam = f.q_power(1) - f.q_power(-1);
  const S xs = x.pow(bar ? -p.s() : p.s()).value() * f.q_power(-1);
  const S x12 = x.pow(bar ? -p.s1 : p.s0).value();
  const S x21 = x.pow(bar ? -p.s0 : p.s1).value();
  const A up = q_cartan(f, HalfInt{1}), down = q_cartan(f, HalfInt{-1});
  Blocks<S> b;
  b[0][0] = up - xs * down;
  b[0][1] = (lam * x12) * A::F() * down;
  b[1][0] = (lam * x21) * A::E() * up;
  b[1][1] = down - xs * up;
  return b;
}

// sum_ij b[i][j] (x) E_ij, first leg the module, second leg C^2.
template <class S>
Matrix<S> assemble(const std::array<std::array<Matrix<S>, 2>, 2>& b) {
  Matrix<S> r(2 * b[0][0].size());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix<S> unit(2);
      unit(i, j) = S(1);
      r += kron(b[i][j], unit);
    }
  return r;
}

template <class S>
Matrix<S> evaluate(const Blocks<S>& b, const Irrep<S>& rep) {
  return assemble<S>({{{evaluate(b[0][0], rep), evaluate(b[0][1], rep)},
                       {evaluate(b[1][0], rep), evaluate(b[1][1], rep)}}});
}

template <class Field>
Matrix<typename Field::Scalar> build_L(const Field& f, const Irrep<typename Field::Scalar>& rep,
                                       const ParamSet<typename Field::Scalar>& p,
                                       const Spectral<typename Field::Scalar>& x, bool bar) {
  return evaluate(l_blocks(f, p, x, bar), rep);
}

// 6-vertex R(x) / Rbar(x), basis order 11, 12, 21, 22, written out entrywise.
template <class Field>
Matrix<typename Field::Scalar> build_R(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                       const Spectral<typename Field::Scalar>& x, bool bar) {
  using S = typename Field::Scalar;
  const S q = f.q_power(1), lam = q - f.q_power(-1);
  const S xs = x.pow(bar ? -p.s() : p.s()).value();
  Matrix<S> r(4);
  r(0, 0) = q - f.q_power(-1) * xs;
  r(3, 3) = r(0, 0);
  r(1, 1) = f.one() - xs;
  r(2, 2) = r(1, 1);
  r(1, 2) = lam * x.pow(bar ? -p.s0 : p.s1).value();
  r(2, 1) = lam * x.pow(bar ? -p.s1 : p.s0).value();
  return r;
}

// General scalar solution of the matrix reflection equation.
template <class Field>
Matrix<typename Field::Scalar> build_K_scalar(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                              const Spectral<typename Field::Scalar>& x) {
  using S = typename Field::Scalar;
  const S lam = f.q_power(1) - f.q_power(-1);
  const S diff = (x.pow(p.s()).value() - x.pow(-p.s()).value()) / lam;
  Matrix<S> k(2);
  k(0, 0) = x.pow(p.s0).value() * p.eps_plus + x.pow(-p.s1).value() * p.eps_minus;
  k(0, 1) = p.k_plus * diff;
  k(1, 0) = p.k_minus * diff;
  k(1, 1) = x.pow(-p.s0).value() * p.eps_plus + x.pow(p.s1).value() * p.eps_minus;
  return k;
}

// sigma on 2x2 matrices: E_ij -> E_{3-i,3-j}.
template <class S>
Matrix<S> sigma_2x2(const Matrix<S>& m) {
  const std::size_t n = m.size();
  return Matrix<S>::from_function(n, [&](std::size_t i, std::size_t j) { return m(n - 1 - i, n - 1 - j); });
}

}  // namespace refl
