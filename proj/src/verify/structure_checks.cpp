#include <array>

#include "helpers.hpp"

namespace refl {

using detail::comm;
using detail::qcomm;

std::string to_string(YbeKind k) {
  switch (k) {
    case YbeKind::RRR: return "RRR";
    case YbeKind::RbRbRb: return "RbRbRb";
    case YbeKind::LLR: return "LLR";
    case YbeKind::LbLbRb: return "LbLbRb";
  }
  return "?";
}

template <class Field>
std::vector<CheckReport> check_representation(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                              const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                              const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  std::vector<CheckReport> out;
  const std::string tag = "[n=" + std::to_string(rep.dim) + "]";
  const S lam = f.q_power(1) - f.q_power(-1);

  std::vector<M> e_lhs, e_rhs, f_lhs, f_rhs, g_lhs, g_rhs;
  for (int twice : {1, 2, 3, -1}) {
    const HalfInt xi{twice};
    const M k = cartan_power(f, rep, xi), ki = cartan_power(f, rep, -xi);
    e_lhs.push_back(k * rep.E * ki);
    e_rhs.push_back(f.v_power(2 * twice) * rep.E);
    f_lhs.push_back(k * rep.F * ki);
    f_rhs.push_back(f.v_power(-2 * twice) * rep.F);
    g_lhs.push_back(k * cartan_power(f, rep, HalfInt{1}));
    g_rhs.push_back(cartan_power(f, rep, HalfInt{twice + 1}));
  }
  // Each relation is checked separately; the stacked form keeps one report per family.
  auto stack = [](const std::vector<M>& ms) {
    M r = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) r = detail::direct_sum(r, ms[i]);
    return r;
  };
  out.push_back(equality_residual("repr.cartan.conj_E" + tag, ctx, stack(e_lhs), stack(e_rhs)));
  out.push_back(equality_residual("repr.cartan.conj_F" + tag, ctx, stack(f_lhs), stack(f_rhs)));
  out.push_back(equality_residual("repr.cartan.group" + tag, ctx, stack(g_lhs), stack(g_rhs)));
  const M qH = cartan_power(f, rep, HalfInt::of(1)), qHi = cartan_power(f, rep, HalfInt::of(-1));
  out.push_back(equality_residual("repr.EF_commutator" + tag, ctx, comm(rep.E, rep.F), (qH - qHi) * (f.one() / lam)));

  const M c = casimir(f, rep);
  out.push_back(equality_residual("repr.casimir.forms" + tag, ctx, c, casimir_ef_form(f, rep)));
  out.push_back(equality_residual("repr.casimir.value" + tag, ctx, c,
                                  casimir_value(f, rep.dim) * M::identity(static_cast<std::size_t>(rep.dim))));
  const M qhalf = cartan_power(f, rep, HalfInt{1});
  out.push_back(equality_residual("repr.casimir.central" + tag, ctx, stack({c * rep.E, c * rep.F, c * qhalf}),
                                  stack({rep.E * c, rep.F * c, qhalf * c})));

  // Serre relations for the evaluated Chevalley generators.
  const M e0 = eval_generator(f, rep, p, {Generator::e0}, x), e1 = eval_generator(f, rep, p, {Generator::e1}, x);
  const M f0 = eval_generator(f, rep, p, {Generator::f0}, x), f1 = eval_generator(f, rep, p, {Generator::f1}, x);
  const S q2 = f.q_power(2), qm2 = f.q_power(-2);
  // Expanded nested brackets for (a, b) and (b, a), stacked term by term.
  auto serre = [&](const M& a, const M& b, const S& inner, const S& outer) {
    using detail::qcomm_terms;
    auto one = [&](const M& u, const M& w) {
      return qcomm_terms(u, qcomm_terms(u, qcomm_terms(u, {w}, inner), f.one()), outer);
    };
    const auto ab = one(a, b), ba = one(b, a);
    std::vector<M> r;
    for (std::size_t i = 0; i < ab.size(); ++i) r.push_back(detail::direct_sum(ab[i], ba[i]));
    return r;
  };
  out.push_back(sum_residual("repr.serre.e" + tag, ctx, serre(e0, e1, q2, qm2)));
  out.push_back(sum_residual("repr.serre.f" + tag, ctx, serre(f0, f1, qm2, q2)));
  return out;
}

template <class Field>
std::vector<CheckReport> check_R_reduction(const Field& f, const ParamSet<ScalarOf<Field>>& p,
                                           const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx) {
  const auto pi = make_irrep(f, 2);
  const auto v = f.v_power(1);
  return {equality_residual("lops.R_reduction", ctx, build_R(f, p, x, false), v * build_L(f, pi, p, x, false)),
          equality_residual("lops.Rbar_reduction", ctx, build_R(f, p, x, true), v * build_L(f, pi, p, x, true))};
}

template <class Field>
std::vector<CheckReport> check_symmetries(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                          const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                          const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  std::vector<CheckReport> out;
  const std::string tag = "[n=" + std::to_string(rep.dim) + "]";
  const auto sp = sigma_params(p), ip = iota_params(p);
  const auto xi = x.inverse();

  // (sigma (x) sigma) L: entry (i,j) is sigma of entry (1-i,1-j), gradation swapped.
  for (bool bar : {false, true}) {
    const auto b = l_blocks(f, sp, x, bar);
    Blocks<S> img;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) img[i][j] = apply_map(f, Involution::sigma, b[1 - i][1 - j]);
    out.push_back(equality_residual(std::string(bar ? "sym.sigma_Lbar" : "sym.sigma_L") + tag, ctx,
                                    evaluate(img, rep), build_L(f, rep, p, x, bar)));
  }
  // (iota (x) iota) L(x) = Lbar(1/x): iota transposes the C^2 factor.
  for (bool bar : {false, true}) {
    const auto b = l_blocks(f, ip, x, bar);
    Blocks<S> img;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) img[i][j] = apply_map(f, Involution::iota, b[j][i]);
    out.push_back(equality_residual(std::string(bar ? "sym.iota_Lbar" : "sym.iota_L") + tag, ctx, evaluate(img, rep),
                                    build_L(f, rep, p, xi, !bar)));
  }
  for (bool bar : {false, true}) {
    const std::string suffix = bar ? "Rbar" : "R";
    out.push_back(
        equality_residual("sym.sigma_" + suffix, ctx, sigma_2x2(build_R(f, sp, x, bar)), build_R(f, p, x, bar)));
    out.push_back(
        equality_residual("sym.iota_" + suffix, ctx, build_R(f, ip, x, bar).transpose(), build_R(f, p, xi, !bar)));
  }

  // sigma(ev_x(a)) with swapped gradation = ev_x(sigma(a)); iota(ev_x(a)) = ev_{1/x}(iota(a)).
  std::vector<M> sigma_lhs, sigma_rhs, iota_lhs, iota_rhs;
  for (Generator g : {Generator::e0, Generator::f0, Generator::k0, Generator::e1, Generator::f1, Generator::k1}) {
    for (int twice : {1, 2}) {
      const AffineGenerator a{g, HalfInt{twice}};
      sigma_lhs.push_back(evaluate(apply_map(f, Involution::sigma, eval_element(f, sp, a, x)), rep));
      sigma_rhs.push_back(eval_generator(f, rep, p, sigma_generator(a), x));
      iota_lhs.push_back(evaluate(apply_map(f, Involution::iota, eval_element(f, p, a, x)), rep));
      iota_rhs.push_back(evaluate(eval_iota_generator(f, p, a, xi), rep));
      if (g != Generator::k0 && g != Generator::k1) break;
    }
  }
  auto stack = [](const std::vector<M>& ms) {
    M r = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) r = detail::direct_sum(r, ms[i]);
    return r;
  };
  out.push_back(equality_residual("sym.sigma_ev" + tag, ctx, stack(sigma_lhs), stack(sigma_rhs)));
  out.push_back(equality_residual("sym.iota_ev" + tag, ctx, stack(iota_lhs), stack(iota_rhs)));
  return out;
}

template <class Field>
CheckReport check_ybe(const Field& f, YbeKind kind, const Irrep<ScalarOf<Field>>& rep,
                      const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                      const Spectral<ScalarOf<Field>>& y, const Spectral<ScalarOf<Field>>& z, const CheckContext& ctx) {
  using M = Matrix<ScalarOf<Field>>;
  const bool bar = kind == YbeKind::RbRbRb || kind == YbeKind::LbLbRb;
  const bool op = kind == YbeKind::LLR || kind == YbeKind::LbLbRb;
  const std::size_t n = op ? static_cast<std::size_t>(rep.dim) : 2;
  const std::array<std::size_t, 3> dims{n, 2, 2};
  auto first = [&](const Spectral<ScalarOf<Field>>& w) {
    return op ? build_L(f, rep, p, w, bar) : build_R(f, p, w, bar);
  };
  const M a12 = embed_pair(first(x / y), dims, 0, 1);
  const M a13 = embed_pair(first(x / z), dims, 0, 2);
  const M r23 = embed_pair(build_R(f, p, y / z, bar), dims, 1, 2);
  std::string name = "ybe." + to_string(kind);
  if (op) name += "[n=" + std::to_string(rep.dim) + "]";
  return equality_residual(name, ctx, a12 * a13 * r23, r23 * a13 * a12);
}

#define INSTANTIATE(F)                                                                                              \
  template std::vector<CheckReport> check_representation<F>(const F&, const Irrep<F::Scalar>&,                      \
                                                            const ParamSet<F::Scalar>&, const Spectral<F::Scalar>&, \
                                                            const CheckContext&);                                   \
  template std::vector<CheckReport> check_R_reduction<F>(const F&, const ParamSet<F::Scalar>&,                      \
                                                         const Spectral<F::Scalar>&, const CheckContext&);          \
  template std::vector<CheckReport> check_symmetries<F>(const F&, const Irrep<F::Scalar>&,                          \
                                                        const ParamSet<F::Scalar>&, const Spectral<F::Scalar>&,     \
                                                        const CheckContext&);                                       \
  template CheckReport check_ybe<F>(const F&, YbeKind, const Irrep<F::Scalar>&, const ParamSet<F::Scalar>&,         \
                                    const Spectral<F::Scalar>&, const Spectral<F::Scalar>&,                         \
                                    const Spectral<F::Scalar>&, const CheckContext&);
REFL_INSTANTIATE(INSTANTIATE)
#undef INSTANTIATE

}  // namespace refl
