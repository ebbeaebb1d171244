#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "refl/scalar/field.hpp"

namespace refl {

// Boundary and gradation parameters. s = s0 + s1 is always derived.
template <class S>
struct ParamSet {
  S eps_plus{1};
  S eps_minus{1};
  S k_plus{0};
  S k_minus{0};
  S p_tilde{0};
  int s0 = 0;
  int s1 = 0;

  int s() const { return s0 + s1; }
};

using RationalParams = ParamSet<mpq_class>;

inline bool is_zero(const mpq_class& c) { return c == 0; }

// Rejects eps_plus * eps_minus == 0.
template <class S>
void validate(const ParamSet<S>& p) {
  if (is_zero(p.eps_plus)) throw std::invalid_argument("eps_plus must be nonzero");
  if (is_zero(p.eps_minus)) throw std::invalid_argument("eps_minus must be nonzero");
}

template <class Field>
ParamSet<typename Field::Scalar> to_field(const Field& f, const RationalParams& p) {
  ParamSet<typename Field::Scalar> r;
  r.eps_plus = f.from_rational(p.eps_plus);
  r.eps_minus = f.from_rational(p.eps_minus);
  r.k_plus = f.from_rational(p.k_plus);
  r.k_minus = f.from_rational(p.k_minus);
  r.p_tilde = f.from_rational(p.p_tilde);
  r.s0 = p.s0;
  r.s1 = p.s1;
  return r;
}

// Parameter images under sigma: eps+ <-> eps-, k+ <-> k-, s0 <-> s1.
template <class S>
ParamSet<S> sigma_params(const ParamSet<S>& p) {
  ParamSet<S> r = p;
  std::swap(r.eps_plus, r.eps_minus);
  std::swap(r.k_plus, r.k_minus);
  std::swap(r.s0, r.s1);
  return r;
}

// Parameter images under iota: k+ <-> k-, everything else fixed.
template <class S>
ParamSet<S> iota_params(const ParamSet<S>& p) {
  ParamSet<S> r = p;
  std::swap(r.k_plus, r.k_minus);
  return r;
}

std::string describe(const RationalParams& p);

// Half-integer stored as twice its value, e.g. the xi of q^{xi H}.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt of(int k) { return HalfInt{2 * k}; }
  static HalfInt from_rational(const mpq_class& r) {
    mpq_class t = 2 * r;
    t.canonicalize();
    if (t.get_den() != 1) throw std::invalid_argument("2*xi must be an integer, got xi = " + r.get_str());
    return HalfInt{static_cast<int>(t.get_num().get_si())};
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  std::string to_string() const {
    return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
  }
};

}  // namespace refl
