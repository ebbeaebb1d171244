#pragma once

#include "refl/repr/algebra.hpp"

namespace refl {

// Evaluated generators T0, T1, P1 of the triangular q-Onsager algebra.
template <class S>
struct TriangularImages {
  AlgebraElement<S> T0, T1, P1;
};

template <class Field>
TriangularImages<typename Field::Scalar> ev_triangular(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                                       const Spectral<typename Field::Scalar>& x) {
  using S = typename Field::Scalar;
  using A = AlgebraElement<S>;
  const S q = f.q_power(1), qi = f.q_power(-1), lam = q - qi;
  const S xs = x.pow(p.s()).value(), xsi = x.pow(-p.s()).value();
  const A up = q_cartan(f, HalfInt::of(1)), down = q_cartan(f, HalfInt::of(-1));
  TriangularImages<S> t;
  t.T0 = (p.k_plus * q * x.pow(p.s1).value()) * A::E() * up + p.eps_plus * up;
  t.T1 = (p.k_plus * x.pow(-p.s0).value()) * A::E() + p.eps_minus * down;
  t.P1 = (-(f.q_power(2) - f.q_power(-2))) * A::F() *
             ((p.eps_minus * q * x.pow(-p.s1).value()) * down + A::scalar(p.eps_plus * x.pow(p.s0).value())) +
         p.k_plus * ((-lam * (xs + xsi)) * casimir_element(f) + ((q + qi) / lam) * (xs * up + xsi * down)) +
         A::scalar(p.p_tilde);
  return t;
}

// Evaluated generators W0, W1 of the q-Onsager algebra.
template <class S>
struct OnsagerImages {
  AlgebraElement<S> W0, W1;
};

template <class Field>
OnsagerImages<typename Field::Scalar> ev_onsager(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                                 const Spectral<typename Field::Scalar>& x) {
  using S = typename Field::Scalar;
  using A = AlgebraElement<S>;
  const S q = f.q_power(1);
  const A up = q_cartan(f, HalfInt::of(1)), down = q_cartan(f, HalfInt::of(-1));
  OnsagerImages<S> w;
  w.W0 = (p.k_plus * q * x.pow(p.s1).value()) * A::E() * up + (p.k_minus * x.pow(-p.s1).value()) * A::F() +
         p.eps_plus * up;
  w.W1 = (p.k_minus * q * x.pow(p.s0).value()) * A::F() * down + (p.k_plus * x.pow(-p.s0).value()) * A::E() +
         p.eps_minus * down;
  return w;
}

}  // namespace refl
