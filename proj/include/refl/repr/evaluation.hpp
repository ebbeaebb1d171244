#pragma once

#include <string>

#include "refl/repr/algebra.hpp"

namespace refl {

// Chevalley generators of the affine algebra; k0/k1 stand for q^{xi h0}, q^{xi h1}.
enum class Generator { e0, f0, k0, e1, f1, k1 };

struct AffineGenerator {
  Generator gen;
  HalfInt xi{};  // only for k0/k1
};

std::string to_string(Generator g);

// Image of an affine generator under ev_x with gradation (s0, s1).
template <class Field>
AlgebraElement<typename Field::Scalar> eval_element(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                                    AffineGenerator g, const Spectral<typename Field::Scalar>& x) {
  using A = AlgebraElement<typename Field::Scalar>;
  switch (g.gen) {
    case Generator::e0: return x.pow(p.s0).value() * A::F();
    case Generator::f0: return x.pow(-p.s0).value() * A::E();
    case Generator::k0: return q_cartan(f, -g.xi);
    case Generator::e1: return x.pow(p.s1).value() * A::E();
    case Generator::f1: return x.pow(-p.s1).value() * A::F();
    case Generator::k1: return q_cartan(f, g.xi);
  }
  return {};
}

template <class Field>
Matrix<typename Field::Scalar> eval_generator(const Field& f, const Irrep<typename Field::Scalar>& rep,
                                              const ParamSet<typename Field::Scalar>& p, AffineGenerator g,
                                              const Spectral<typename Field::Scalar>& x) {
  return evaluate(eval_element(f, p, g, x), rep);
}

// sigma on affine generators: e0 <-> e1, f0 <-> f1, h0 <-> h1.
inline AffineGenerator sigma_generator(AffineGenerator g) {
  switch (g.gen) {
    case Generator::e0: return {Generator::e1, g.xi};
    case Generator::e1: return {Generator::e0, g.xi};
    case Generator::f0: return {Generator::f1, g.xi};
    case Generator::f1: return {Generator::f0, g.xi};
    case Generator::k0: return {Generator::k1, g.xi};
    case Generator::k1: return {Generator::k0, g.xi};
  }
  return g;
}

// ev_x(iota(a)) for an affine generator a:
// iota(e_i) = q^{-1-h_i} f_i, iota(f_i) = e_i q^{1+h_i}, iota(q^{xi h_i}) = q^{xi h_i}.
template <class Field>
AlgebraElement<typename Field::Scalar> eval_iota_generator(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                                           AffineGenerator g,
                                                           const Spectral<typename Field::Scalar>& x) {
  using S = typename Field::Scalar;
  // q^{-h_i - 1} evaluated: h0 -> -H, h1 -> H.
  auto shifted_cartan = [&](bool index0, int sign) {
    return AlgebraElement<S>::cartan([f, index0, sign](int h) {
      const int hi = index0 ? -h : h;
      return f.q_power(sign * (hi + 1));
    });
  };
  switch (g.gen) {
    case Generator::e0: return shifted_cartan(true, -1) * eval_element(f, p, {Generator::f0, {}}, x);
    case Generator::f0: return eval_element(f, p, {Generator::e0, {}}, x) * shifted_cartan(true, 1);
    case Generator::e1: return shifted_cartan(false, -1) * eval_element(f, p, {Generator::f1, {}}, x);
    case Generator::f1: return eval_element(f, p, {Generator::e1, {}}, x) * shifted_cartan(false, 1);
    default: return eval_element(f, p, g, x);
  }
}

}  // namespace refl
