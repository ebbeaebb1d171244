#include "helpers.hpp"

namespace refl {

namespace {

std::string dim_tag(int n) { return "[n=" + std::to_string(n) + "]"; }

// Sides of L12(y/x) K1(x) Lbar12(xy) K2(y) = K2(y) L12(1/xy) K1(x) Lbar12(x/y).
template <class Field>
std::pair<Matrix<ScalarOf<Field>>, Matrix<ScalarOf<Field>>> reflection_sides(
    const Field& f, const Irrep<ScalarOf<Field>>* rep, const Matrix<ScalarOf<Field>>& k, const ParamSet<ScalarOf<Field>>& p,
    const Spectral<ScalarOf<Field>>& x, const Spectral<ScalarOf<Field>>& y) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  auto lop = [&](const Spectral<S>& w, bool bar) { return rep ? build_L(f, *rep, p, w, bar) : build_R(f, p, w, bar); };
  const M k1 = kron(k, M::identity(2));
  const M k2 = kron(M::identity(k.size()), build_K_scalar(f, p, y));
  const M lhs = lop(y / x, false) * k1 * lop(x * y, true) * k2;
  const M rhs = k2 * lop((x * y).inverse(), false) * k1 * lop(x / y, true);
  return {lhs, rhs};
}

// Parameters with the variant's vanishing k imposed.
template <class S>
ParamSet<S> constrained(ParamSet<S> p, Variant v) {
  switch (v) {
    case Variant::upper:
    case Variant::lower_alt: p.k_minus = S(0); break;
    case Variant::lower:
    case Variant::upper_alt: p.k_plus = S(0); break;
    case Variant::diagonal: p.k_plus = S(0); p.k_minus = S(0); break;
    case Variant::onsager_candidate: break;
  }
  return p;
}

}  // namespace

template <class Field>
CheckReport check_reflection_matrix(const Field& f, const ParamSet<ScalarOf<Field>>& p,
                                    const Spectral<ScalarOf<Field>>& x, const Spectral<ScalarOf<Field>>& y,
                                    const CheckContext& ctx) {
  const auto [lhs, rhs] = reflection_sides(f, nullptr, build_K_scalar(f, p, x), p, x, y);
  return equality_residual("reflection.matrix", ctx, lhs, rhs);
}

template <class Field>
CheckReport check_reflection_operator(const Field& f, Variant v, const Irrep<ScalarOf<Field>>& rep,
                                      const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                      const Spectral<ScalarOf<Field>>& y, const CheckContext& ctx) {
  const auto pc = constrained(p, v);
  const auto k = build_K(f, rep, KOperatorSpec<ScalarOf<Field>>{v, pc, x});
  const auto [lhs, rhs] = reflection_sides(f, &rep, k, pc, x, y);
  return equality_residual("reflection.operator." + to_string(v) + dim_tag(rep.dim), ctx, lhs, rhs);
}

template <class Field>
CheckReport check_reflection_oracle(const Field& f, Variant v, const ParamSet<ScalarOf<Field>>& p,
                                    const Spectral<ScalarOf<Field>>& x, const Spectral<ScalarOf<Field>>& y,
                                    const CheckContext& ctx) {
  const auto pc = constrained(p, v);
  const auto pi = make_irrep(f, 2);
  const auto k = build_K(f, pi, KOperatorSpec<ScalarOf<Field>>{v, pc, x});
  const auto [lo, ro] = reflection_sides(f, &pi, k, pc, x, y);
  const auto [lm, rm] = reflection_sides(f, nullptr, k, pc, x, y);
  return sum_residual("reflection.oracle_n2." + to_string(v), ctx, {f.q_power(1) * lo, -(f.q_power(1) * ro), -lm, rm});
}

namespace {

// Generator images for the variant: T0, T1, P1 for upper/diagonal, their iota
// images for lower, sigma images for upper_alt and sigma-iota images for lower_alt.
template <class Field>
std::vector<AlgebraElement<ScalarOf<Field>>> mapped_generators(const Field& f, Variant v,
                                                               const ParamSet<ScalarOf<Field>>& p,
                                                               const Spectral<ScalarOf<Field>>& x) {
  using E = AlgebraElement<ScalarOf<Field>>;
  auto list = [](const TriangularImages<ScalarOf<Field>>& t) { return std::vector<E>{t.T0, t.T1, t.P1}; };
  auto mapped = [&](Involution m, std::vector<E> xs) {
    for (auto& e : xs) e = apply_map(f, m, e);
    return xs;
  };
  switch (v) {
    case Variant::upper:
    case Variant::diagonal:
    case Variant::onsager_candidate: return list(ev_triangular(f, p, x));
    case Variant::lower: return mapped(Involution::iota, list(ev_triangular(f, iota_params(p), x.inverse())));
    case Variant::upper_alt: return mapped(Involution::sigma, list(ev_triangular(f, sigma_params(p), x)));
    case Variant::lower_alt:
      return mapped(Involution::sigma,
                    mapped(Involution::iota, list(ev_triangular(f, iota_params(sigma_params(p)), x.inverse()))));
  }
  return {};
}

}  // namespace

template <class Field>
std::vector<CheckReport> check_intertwining(const Field& f, Variant v, const Irrep<ScalarOf<Field>>& rep,
                                            const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                            const CheckContext& ctx) {
  const auto pc = constrained(p, v);
  const auto k = build_K(f, rep, KOperatorSpec<ScalarOf<Field>>{v, pc, x});
  const auto at_x = mapped_generators(f, v, pc, x);
  const auto at_xi = mapped_generators(f, v, pc, x.inverse());
  static const char* names[] = {"T0", "T1", "P1"};
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < at_x.size(); ++i)
    out.push_back(equality_residual("intertwining." + to_string(v) + "." + names[i] + dim_tag(rep.dim), ctx,
                                    evaluate(at_xi[i], rep) * k, k * evaluate(at_x[i], rep)));
  return out;
}

template <class Field>
std::vector<CheckReport> check_aux_lemmas(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                          const ParamSet<ScalarOf<Field>>& p_in, const Spectral<ScalarOf<Field>>& x,
                                          const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  const auto p = constrained(p_in, Variant::upper);
  const std::string tag = dim_tag(rep.dim);
  const std::size_t n = static_cast<std::size_t>(rep.dim);
  const M I = M::identity(n);
  const S q = f.q_power(1), qi = f.q_power(-1), lam = q - qi;
  const S ep = p.eps_plus, em = p.eps_minus, kp = p.k_plus;
  const S xs = x.pow(p.s()).value(), xsi = x.pow(-p.s()).value();
  const S xs0 = x.pow(p.s0).value(), xs0i = x.pow(-p.s0).value();
  const S xs1 = x.pow(p.s1).value(), xs1i = x.pow(-p.s1).value();
  auto H = [&](int twice) { return cartan_power(f, rep, HalfInt{twice}); };
  const M& E = rep.E;
  const M& F = rep.F;
  const M C = casimir(f, rep);
  const S alpha = -q * kp * xs0i / (lam * em);
  const M X = alpha * (E * H(2));
  const M k0 = build_K0_diagonal(f, rep, p, x, CartanSign::minusH);
  const M K = build_K(f, rep, KOperatorSpec<S>{Variant::upper, p, x});
  std::vector<CheckReport> out;

  out.push_back(equality_residual("aux.conjugated_T1" + tag, ctx,
                                  q_exp_nilpotent(f, X) * (kp * xs0i * E + em * H(-2)) * q_exp_nilpotent(f, X, true),
                                  em * H(-2)));

  const S r = em / ep;
  const M g = weight_diagonal(rep, [&](int h) {
    return (f.one() + r * xs * f.q_power(1 - h)) / (f.one() + r * xsi * f.q_power(1 - h));
  });
  out.push_back(equality_residual("aux.E_K0_shift" + tag, ctx, E * k0, k0 * g * E));

  out.push_back(sum_residual(
      "aux.reduced_F" + tag, ctx,
      {-(lam * lam * xs1i) * ((kp * qi * xs0) * E + (em * qi) * H(-2) + (ep * xs) * I) * K * F * H(-2),
       (lam * lam * xs1) * (F * H(-2) * K * ((kp * q * xs0i) * E + (em * q) * H(-2) + (ep * xsi) * I)),
       (kp * (xs - xsi * f.q_power(-2))) * K, -(kp * (xs - xsi * f.q_power(-2))) * (H(-2) * K * H(-2))}));

  out.push_back(equality_residual("aux.reduced_E" + tag, ctx, E * H(2) * K * ((ep * xs0 * q) * H(2) + (em * xs1i) * I),
                                  ((ep * xs0i * qi) * H(2) + (em * xs1) * I) * K * E * H(2)));

  out.push_back(equality_residual("aux.K0_E" + tag, ctx, E * ((ep * q) * H(2) + (em * xsi) * I) * k0,
                                  k0 * E * ((ep * q) * H(2) + (em * xs) * I)));
  out.push_back(equality_residual("aux.K0_F" + tag, ctx, F * (ep * I + (em * xs * q) * H(-2)) * k0,
                                  k0 * F * (ep * I + (em * xsi * q) * H(-2))));

  // The bracket multiplying K0 in the final reduction of the reflection equation.
  const M G = weight_diagonal(rep, [&](int h) {
    return (ep + em * xs * f.q_power(1 - h)) / (ep + em * xsi * f.q_power(1 - h));
  });
  const S a = alpha;
  const M X1 = ((lam * kp * qi * xsi) * I - (lam * lam * ep * xs0 * a * qi) * H(2)) * C +
               lam * F * ((ep * xs0) * I + (em * xs1i * q) * H(-2)) -
               a * E * ((lam * ep * a * xs0 * q) * H(6) - (kp * xsi * qi) * H(4)) +
               (ep * a * (f.one() + f.q_power(2)) * xs0 * f.q_power(-2)) * H(4) + (em * a * xs1i * qi) * H(2) -
               (kp / lam * xsi * f.q_power(-2)) * H(2);
  const M X2 = ((lam * kp * qi * xs) * I - (lam * lam * ep * xs0 * a * f.q_power(-3)) * H(2)) * C +
               (lam * f.q_power(-2)) * F * ((ep * xs0) * I + (em * xs1i * q) * H(-2)) -
               a * E * ((lam * ep * a * xs0 * qi) * H(6) - (kp * xs * qi) * H(4)) +
               (ep * a * (f.one() + f.q_power(2)) * xs0 * f.q_power(-4)) * H(4) +
               (em * a * xs1i * f.q_power(-3)) * H(2) - (kp / lam * xs * f.q_power(-2)) * H(2);
  out.push_back(sum_residual("aux.bracket_zero" + tag, ctx,
                             {-(H(2) - (lam * a * q) * (G * E * H(4))) * X1,
                              X2 * (H(2) + (a * (f.one() - f.q_power(2))) * (E * H(4))),
                              -(kp / lam * (xs - xsi * f.q_power(-2))) * I}));
  return out;
}

template <class Field>
std::vector<CheckReport> check_k_forms(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                       const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                       const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  const std::string tag = dim_tag(rep.dim);
  std::vector<CheckReport> out;
  const Variant all[] = {Variant::diagonal, Variant::upper, Variant::lower, Variant::upper_alt, Variant::lower_alt};
  const M casimir_m = casimir(f, rep);

  for (Variant v : all) {
    const KOperatorSpec<S> spec{v, constrained(p, v), x};
    const M k = build_K(f, rep, spec);
    out.push_back(equality_residual("kops.form.unfactored." + to_string(v) + tag, ctx, k,
                                    build_K_unfactored(f, rep, spec)));
    out.push_back(equality_residual("kops.casimir_commute." + to_string(v) + tag, ctx, k * casimir_m, casimir_m * k));
    const auto pz = constrained(p, Variant::diagonal);
    const bool alt = v == Variant::upper_alt || v == Variant::lower_alt;
    const M diag = spectral_cartan(rep, x, alt ? -p.s1 : p.s0) *
                   build_K0_diagonal(f, rep, pz, x, alt ? CartanSign::plusH : CartanSign::minusH);
    out.push_back(equality_residual("kops.degenerate." + to_string(v) + tag, ctx,
                                    build_K(f, rep, KOperatorSpec<S>{v, pz, x}), diag));
  }

  const auto pu = constrained(p, Variant::upper);
  out.push_back(equality_residual("kops.form.conjugated" + tag, ctx,
                                  build_K(f, rep, KOperatorSpec<S>{Variant::upper, pu, x}),
                                  build_K_conjugated(f, rep, pu, x)));

  // Variant relations on the algebra level: lower = iota(upper), upper_alt = sigma(upper),
  // lower_alt = sigma(lower), each with the matching parameter map.
  const int terms = rep.dim;
  const auto pl = constrained(p, Variant::lower);
  const auto pla = constrained(p, Variant::lower_alt);
  const auto pua = constrained(p, Variant::upper_alt);
  out.push_back(equality_residual(
      "kops.variant.lower_iota" + tag, ctx,
      evaluate(apply_map(f, Involution::iota, k_element(f, KOperatorSpec<S>{Variant::upper, iota_params(pl), x}, terms)),
               rep),
      build_K(f, rep, KOperatorSpec<S>{Variant::lower, pl, x})));
  out.push_back(equality_residual(
      "kops.variant.upper_alt_sigma" + tag, ctx,
      evaluate(apply_map(f, Involution::sigma,
                         k_element(f, KOperatorSpec<S>{Variant::upper, sigma_params(pua), x}, terms)),
               rep),
      build_K(f, rep, KOperatorSpec<S>{Variant::upper_alt, pua, x})));
  out.push_back(equality_residual(
      "kops.variant.lower_alt_sigma" + tag, ctx,
      evaluate(apply_map(f, Involution::sigma,
                         k_element(f, KOperatorSpec<S>{Variant::lower, sigma_params(pla), x}, terms)),
               rep),
      build_K(f, rep, KOperatorSpec<S>{Variant::lower_alt, pla, x})));
  return out;
}

template <class Field>
std::vector<CheckReport> check_fundamental_K(const Field& f, const ParamSet<ScalarOf<Field>>& p,
                                             const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  const auto pi = make_irrep(f, 2);
  std::vector<CheckReport> out;
  for (Variant v : {Variant::upper, Variant::lower}) {
    const auto pc = constrained(p, v);
    out.push_back(equality_residual("kops.fundamental." + to_string(v), ctx,
                                    build_K(f, pi, KOperatorSpec<S>{v, pc, x}),
                                    kappa(f, pc, x) * build_K_scalar(f, pc, x)));
  }
  return out;
}

#define INSTANTIATE(F)                                                                                               \
  template CheckReport check_reflection_matrix<F>(const F&, const ParamSet<F::Scalar>&, const Spectral<F::Scalar>&, \
                                                  const Spectral<F::Scalar>&, const CheckContext&);                  \
  template CheckReport check_reflection_operator<F>(const F&, Variant, const Irrep<F::Scalar>&,                     \
                                                    const ParamSet<F::Scalar>&, const Spectral<F::Scalar>&,          \
                                                    const Spectral<F::Scalar>&, const CheckContext&);                \
  template CheckReport check_reflection_oracle<F>(const F&, Variant, const ParamSet<F::Scalar>&,                    \
                                                  const Spectral<F::Scalar>&, const Spectral<F::Scalar>&,            \
                                                  const CheckContext&);                                              \
  template std::vector<CheckReport> check_intertwining<F>(const F&, Variant, const Irrep<F::Scalar>&,               \
                                                          const ParamSet<F::Scalar>&, const Spectral<F::Scalar>&,    \
                                                          const CheckContext&);                                      \
  template std::vector<CheckReport> check_aux_lemmas<F>(const F&, const Irrep<F::Scalar>&,                          \
                                                        const ParamSet<F::Scalar>&, const Spectral<F::Scalar>&,      \
                                                        const CheckContext&);                                        \
  template std::vector<CheckReport> check_k_forms<F>(const F&, const Irrep<F::Scalar>&, const ParamSet<F::Scalar>&, \
                                                     const Spectral<F::Scalar>&, const CheckContext&);               \
  template std::vector<CheckReport> check_fundamental_K<F>(const F&, const ParamSet<F::Scalar>&,                    \
                                                           const Spectral<F::Scalar>&, const CheckContext&);
REFL_INSTANTIATE(INSTANTIATE)
#undef INSTANTIATE

}  // namespace refl
