#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "refl/lops/lops.hpp"

namespace refl {

enum class Variant { diagonal, upper, lower, upper_alt, lower_alt, onsager_candidate };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& s);

template <class S>
struct KOperatorSpec {
  Variant variant;
  ParamSet<S> params;
  Spectral<S> x;
};

// k_- = 0 for upper/lower_alt, k_+ = 0 for lower/upper_alt, both for diagonal.
template <class S>
void validate(const KOperatorSpec<S>& spec) {
  validate(spec.params);
  const bool kp = !is_zero(spec.params.k_plus), km = !is_zero(spec.params.k_minus);
  const std::string name = to_string(spec.variant);
  switch (spec.variant) {
    case Variant::upper:
    case Variant::lower_alt:
      if (km) throw std::invalid_argument(name + " K-operator requires k_minus = 0");
      break;
    case Variant::lower:
    case Variant::upper_alt:
      if (kp) throw std::invalid_argument(name + " K-operator requires k_plus = 0");
      break;
    case Variant::diagonal:
      if (kp || km) throw std::invalid_argument("diagonal K-operator requires k_plus = k_minus = 0");
      break;
    case Variant::onsager_candidate: break;
  }
}

// The evaluation in the exact backend has no root-finding, so a
// non-triangular argument cannot be diagonalized there.
class NumericOnlyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exp_{q^{-2}}(M) = sum_k M^k / (k)_{q^{-2}}!, or with inverse = true
// exp_{q^{-2}}(M)^{-1} = sum_k (-M)^k / (k)_{q^2}!. M must be nilpotent.
template <class Field>
Matrix<typename Field::Scalar> q_exp_nilpotent(const Field& f, const Matrix<typename Field::Scalar>& m,
                                               bool inverse = false) {
  using S = typename Field::Scalar;
  const std::size_t n = m.size();
  const S base = f.q_power(inverse ? 2 : -2);
  const Matrix<S> x = inverse ? -m : m;
  Matrix<S> sum = Matrix<S>::identity(n), power = Matrix<S>::identity(n);
  S fact = f.one();
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * x;
    if (k == n) {
      for (const auto& e : power.entries())
        if (!f.is_zero(e))
          throw std::invalid_argument("q_exp_nilpotent: argument is not nilpotent, M^" + std::to_string(n) +
                                      " is nonzero");
      break;
    }
    fact *= q_integer(f, base, static_cast<int>(k));
    sum += power * (f.one() / fact);
  }
  return sum;
}

// Same series on algebra elements, truncated after `terms` powers.
template <class Field>
AlgebraElement<typename Field::Scalar> q_exp_element(const Field& f, const AlgebraElement<typename Field::Scalar>& x,
                                                     int terms, bool inverse = false) {
  using S = typename Field::Scalar;
  const S base = f.q_power(inverse ? 2 : -2);
  const AlgebraElement<S> y = inverse ? -x : x;
  AlgebraElement<S> sum = AlgebraElement<S>::scalar(f.one()), power = sum;
  S fact = f.one();
  for (int k = 1; k < terms; ++k) {
    power = power * y;
    fact *= q_integer(f, base, k);
    sum += power * (f.one() / fact);
  }
  return sum;
}

enum class CartanSign { minusH, plusH };

// Weight-h entry of K0 (minusH) or K0+ (plusH): a ratio of infinite q-Pochhammer symbols
// (A x^s; q^{-2})_inf / (A x^{-s}; q^{-2})_inf with A = -(eps-/eps+) q^{-h-1}
// or A = -(eps+/eps-) q^{h-1}.
template <class Field>
typename Field::Scalar k0_entry(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                const Spectral<typename Field::Scalar>& x, CartanSign sign, int h) {
  const auto A = sign == CartanSign::minusH ? -(p.eps_minus / p.eps_plus) * f.q_power(-h - 1)
                                            : -(p.eps_plus / p.eps_minus) * f.q_power(h - 1);
  return inf_poch_ratio(f, A, x.pow(p.s()));
}

template <class Field>
Matrix<typename Field::Scalar> build_K0_diagonal(const Field& f, const Irrep<typename Field::Scalar>& rep,
                                                 const ParamSet<typename Field::Scalar>& p,
                                                 const Spectral<typename Field::Scalar>& x, CartanSign sign) {
  validate(p);
  return weight_diagonal(rep, [&](int h) { return k0_entry(f, p, x, sign, h); });
}

namespace detail {

template <class Field>
struct KFactors {
  using S = typename Field::Scalar;
  int prefix_sign;      // x^{prefix_sign * s_i H}
  int prefix_exponent;  // s0 or s1
  CartanSign k0_sign;
  AlgebraElement<S> nilpotent;  // argument of the q-exponentials
  bool inverse_first;           // exp^{-1}(X) K0 exp(X) vs exp(X) K0 exp^{-1}(X)
};

template <class Field>
KFactors<Field> k_factors(const Field& f, const ParamSet<typename Field::Scalar>& p,
                          const Spectral<typename Field::Scalar>& x, Variant v) {
  using S = typename Field::Scalar;
  using A = AlgebraElement<S>;
  const S q = f.q_power(1), lam = q - f.q_power(-1);
  switch (v) {
    case Variant::diagonal:
      return {1, p.s0, CartanSign::minusH, A(), true};
    case Variant::upper: {
      const S alpha = -q * p.k_plus * x.pow(-p.s0).value() / (lam * p.eps_minus);
      return {1, p.s0, CartanSign::minusH, alpha * A::E() * q_cartan(f, HalfInt::of(1)), true};
    }
    case Variant::lower: {
      const S alpha = -p.k_minus * x.pow(p.s0).value() / (lam * p.eps_minus);
      return {1, p.s0, CartanSign::minusH, alpha * A::F(), false};
    }
    case Variant::upper_alt: {
      const S beta = -q * p.k_minus * x.pow(-p.s1).value() / (lam * p.eps_plus);
      return {-1, p.s1, CartanSign::plusH, beta * A::F() * q_cartan(f, HalfInt::of(-1)), true};
    }
    case Variant::lower_alt: {
      const S beta = -p.k_plus * x.pow(p.s1).value() / (lam * p.eps_plus);
      return {-1, p.s1, CartanSign::plusH, beta * A::E(), false};
    }
    case Variant::onsager_candidate: break;
  }
  throw std::invalid_argument("factored form is not defined for the onsager candidate");
}

}  // namespace detail

// Factored K-operator as an element of U_q(sl2), with q-exponentials truncated
// after `terms` powers. Used for sigma / iota images.
template <class Field>
AlgebraElement<typename Field::Scalar> k_element(const Field& f, const KOperatorSpec<typename Field::Scalar>& spec,
                                                 int terms) {
  using S = typename Field::Scalar;
  validate(spec);
  const auto fac = detail::k_factors(f, spec.params, spec.x, spec.variant);
  const auto& p = spec.params;
  const auto& x = spec.x;
  auto k0 = AlgebraElement<S>::cartan([f, p, x, sign = fac.k0_sign](int h) { return k0_entry(f, p, x, sign, h); });
  auto pre = spectral_cartan_element(x, fac.prefix_sign * fac.prefix_exponent);
  auto left = q_exp_element(f, fac.nilpotent, terms, fac.inverse_first);
  auto right = q_exp_element(f, fac.nilpotent, terms, !fac.inverse_first);
  return pre * left * k0 * right;
}

// Factored K-operator on the module `rep`.
template <class Field>
Matrix<typename Field::Scalar> build_K(const Field& f, const Irrep<typename Field::Scalar>& rep,
                                       const KOperatorSpec<typename Field::Scalar>& spec) {
  using S = typename Field::Scalar;
  validate(spec);
  const auto fac = detail::k_factors(f, spec.params, spec.x, spec.variant);
  const Matrix<S> k0 = build_K0_diagonal(f, rep, spec.params, spec.x, fac.k0_sign);
  const Matrix<S> pre = spectral_cartan(rep, spec.x, fac.prefix_sign * fac.prefix_exponent);
  if (spec.variant == Variant::diagonal) return pre * k0;
  const Matrix<S> x = evaluate(fac.nilpotent, rep);
  return pre * q_exp_nilpotent(f, x, fac.inverse_first) * k0 * q_exp_nilpotent(f, x, !fac.inverse_first);
}

// g(M) for triangular M with pairwise distinct diagonal entries, via the
// eigenvector matrix obtained by back-substitution.
template <class Field, class Fn>
Matrix<typename Field::Scalar> triangular_function(const Field& f, const Matrix<typename Field::Scalar>& m, Fn&& g) {
  using S = typename Field::Scalar;
  if (!m.is_upper_triangular()) {
    if (!m.is_lower_triangular()) throw NumericOnlyError("triangular_function: argument is not triangular");
    return triangular_function(f, m.transpose(), g).transpose();
  }
  const std::size_t n = m.size();
  Matrix<S> vecs(n), gdiag(n);
  for (std::size_t k = 0; k < n; ++k) {
    vecs(k, k) = f.one();
    for (std::size_t i = k; i-- > 0;) {
      const S gap = m(k, k) - m(i, i);
      if (f.is_zero(gap)) throw PoleError("triangular_function: repeated eigenvalue");
      S acc = f.zero();
      for (std::size_t j = i + 1; j <= k; ++j) acc += m(i, j) * vecs(j, k);
      vecs(i, k) = acc / gap;
    }
    gdiag(k, k) = g(m(k, k));
  }
  return vecs * gdiag * inverse(vecs);
}

namespace detail {

// Argument M, denominator parameter eps and prefix of the unfactored form.
template <class Field>
struct SpectralForm {
  AlgebraElement<typename Field::Scalar> argument;
  typename Field::Scalar eps;
  int prefix;  // exponent c in x^{cH}
};

template <class Field>
SpectralForm<Field> spectral_form(const Field& f, const ParamSet<typename Field::Scalar>& p,
                                  const Spectral<typename Field::Scalar>& x, Variant v) {
  using S = typename Field::Scalar;
  using A = AlgebraElement<S>;
  const S q = f.q_power(1);
  const A up = q_cartan(f, HalfInt::of(1)), down = q_cartan(f, HalfInt::of(-1));
  const A w1_e = (p.k_plus * x.pow(-p.s0).value()) * A::E();
  const A w1_f = (p.k_minus * q * x.pow(p.s0).value()) * A::F() * down;
  const A w1_h = p.eps_minus * down;
  switch (v) {
    case Variant::diagonal:
    case Variant::upper:
    case Variant::lower:
    case Variant::onsager_candidate:
      return {w1_e + w1_f + w1_h, p.eps_plus, p.s0};
    case Variant::upper_alt:
    case Variant::lower_alt:
      return {(p.k_minus * x.pow(-p.s1).value()) * A::F() +
                  (p.k_plus * q * x.pow(p.s1).value()) * A::E() * up + p.eps_plus * up,
              p.eps_minus, -p.s1};
  }
  return {A(), p.eps_plus, 0};
}

}  // namespace detail

// z -> (-q^{-1} x^s z / eps; q^{-2})_inf / (-q^{-1} x^{-s} z / eps; q^{-2})_inf
template <class Field>
typename Field::Scalar spectral_function(const Field& f, const typename Field::Scalar& z,
                                         const typename Field::Scalar& eps, const Spectral<typename Field::Scalar>& xs) {
  return inf_poch_ratio(f, -(f.q_power(-1) * z) / eps, xs);
}

// Product form of the matrix function on a non-triangular argument:
// prod_j (1 - c w p^j M) * (prod_j (1 - c w^{-1} p^j M))^{-1}, p = q^{-2}.
inline Matrix<Complex> spectral_function_truncated(const NumericField& f, const Matrix<Complex>& m, Complex c,
                                                   Complex w) {
  const std::size_t n = m.size();
  double norm = 0.0;
  for (const auto& e : m.entries()) norm = std::max(norm, std::abs(e));
  const Complex p = f.q_power(-2);
  Matrix<Complex> num = Matrix<Complex>::identity(n), den = num, id = num;
  Complex a = c * w, b = c / w;
  for (int j = 0;; ++j) {
    if (j >= f.max_terms()) throw ConvergenceError("spectral_function_truncated: max_terms reached");
    if (std::max(std::abs(a), std::abs(b)) * norm < f.truncation_tol()) break;
    num = num * (id - a * m);
    den = den * (id - b * m);
    a *= p;
    b *= p;
  }
  return num * inverse(den);
}

// Unfactored form x^{cH} g(M). Exact backend needs a triangular M.
template <class Field>
Matrix<typename Field::Scalar> build_K_unfactored(const Field& f, const Irrep<typename Field::Scalar>& rep,
                                                  const KOperatorSpec<typename Field::Scalar>& spec) {
  using S = typename Field::Scalar;
  validate(spec);
  const auto form = detail::spectral_form(f, spec.params, spec.x, spec.variant);
  const Matrix<S> m = evaluate(form.argument, rep);
  const Spectral<S> xs = spec.x.pow(spec.params.s());
  const Matrix<S> pre = spectral_cartan(rep, spec.x, form.prefix);
  if (!m.is_upper_triangular() && !m.is_lower_triangular()) {
    if constexpr (Field::exact) {
      throw NumericOnlyError("argument is not triangular; eigenvalues are not available in the exact field "
                             "(numeric only)");
    } else {
      return pre * spectral_function_truncated(f, m, -f.q_power(-1) / form.eps, xs.value());
    }
  }
  return pre * triangular_function(f, m, [&](const S& z) { return spectral_function(f, z, form.eps, xs); });
}

// x^{s0 H} g(ev_x(W1)) with W1 carrying both k_+ and k_-.
template <class Field>
Matrix<typename Field::Scalar> build_K_onsager_candidate(const Field& f, const Irrep<typename Field::Scalar>& rep,
                                                         const ParamSet<typename Field::Scalar>& p,
                                                         const Spectral<typename Field::Scalar>& x) {
  return build_K_unfactored(f, rep, KOperatorSpec<typename Field::Scalar>{Variant::onsager_candidate, p, x});
}

// Rewriting of the upper K-operator as frakK(x^{-1})^{-1} x^{s0 H} frakK(x) with
// frakK(x) = exp(-eps-/(eps+ lam) x^{-s} q^{-H}) exp(-q k+/(eps- lam) x^{-s0} E q^H).
// The Cartan exponential is not nilpotent; exp_{q^{-2}}(z) = ((1-p) z; p)_inf^{-1},
// so the two Cartan factors combine to a ratio of infinite products.
template <class Field>
Matrix<typename Field::Scalar> build_K_conjugated(const Field& f, const Irrep<typename Field::Scalar>& rep,
                                                const ParamSet<typename Field::Scalar>& p,
                                                const Spectral<typename Field::Scalar>& x) {
  using S = typename Field::Scalar;
  validate(KOperatorSpec<S>{Variant::upper, p, x});
  const S q = f.q_power(1), lam = q - f.q_power(-1);
  const S c = -p.eps_minus / (p.eps_plus * lam);
  const S one_minus_p = f.one() - f.q_power(-2);
  const Matrix<S> cartan = weight_diagonal(
      rep, [&](int h) { return inf_poch_ratio(f, one_minus_p * c * f.q_power(-h), x.pow(p.s())); });
  auto nil = [&](const Spectral<S>& y) {
    return evaluate((-q * p.k_plus * y.pow(-p.s0).value() / (p.eps_minus * lam)) * AlgebraElement<S>::E() *
                        q_cartan(f, HalfInt::of(1)),
                    rep);
  };
  return q_exp_nilpotent(f, nil(x.inverse()), true) * cartan * spectral_cartan(rep, x, p.s0) *
         q_exp_nilpotent(f, nil(x));
}

// kappa(x) = (-(eps-/eps+) x^s q^{-2}; q^{-2})_inf / (eps+ (-(eps-/eps+) x^{-s}; q^{-2})_inf)
template <class Field>
typename Field::Scalar kappa(const Field& f, const ParamSet<typename Field::Scalar>& p,
                             const Spectral<typename Field::Scalar>& x) {
  validate(p);
  const auto A = -(p.eps_minus / p.eps_plus) * f.q_power(-1);
  const auto w = x.pow(p.s()) * Spectral<typename Field::Scalar>::from_q_exponent(f, -1);
  return inf_poch_ratio(f, A, w) / p.eps_plus;
}

}  // namespace refl
