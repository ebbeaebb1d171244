#include <functional>

#include "helpers.hpp"

namespace refl {

namespace {

std::string dim_tag(int n) { return "[n=" + std::to_string(n) + "]"; }

template <class S>
struct Gens {
  Matrix<S> e0, f0, k0, k0i, e1, f1, k1, k1i, I;
};

template <class Field>
Gens<ScalarOf<Field>> evaluated_gens(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                     const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x) {
  auto g = [&](Generator gen, int xi = 0) { return eval_generator(f, rep, p, {gen, HalfInt::of(xi)}, x); };
  return {g(Generator::e0), g(Generator::f0), g(Generator::k0, 1), g(Generator::k0, -1), g(Generator::e1),
          g(Generator::f1), g(Generator::k1, 1), g(Generator::k1, -1),
          Matrix<ScalarOf<Field>>::identity(static_cast<std::size_t>(rep.dim))};
}

}  // namespace

template <class Field>
std::vector<CheckReport> check_coideal_algebras(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                                const ParamSet<ScalarOf<Field>>& p,
                                                const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  using detail::qcomm;
  const std::string tag = dim_tag(rep.dim);
  const S q = f.q_power(1), q2 = f.q_power(2), q2i = f.q_power(-2);
  const S rho = ipow(q + f.q_power(-1), 2);
  const auto pt = [&] {
    auto r = p;
    r.k_minus = S(0);
    return r;
  }();
  const auto t = ev_triangular(f, pt, x);
  const auto T0 = evaluate(t.T0, rep), T1 = evaluate(t.T1, rep), P = evaluate(t.P1, rep);
  const auto g = evaluated_gens(f, rep, pt, x);
  std::vector<CheckReport> out;

  const auto pdef = (-(q2 - q2i)) * (pt.eps_minus * q * (g.f1 * g.k0) + pt.eps_plus * g.e0) +
                    (pt.k_plus / q) * (qcomm(g.f1, g.f0, q2) + qcomm(g.e1, g.e0, q2)) + pt.p_tilde * g.I;
  out.push_back(equality_residual("coideal.P1_definition" + tag, ctx, P, pdef));
  using detail::concat;
  using detail::qcomm_terms;
  using detail::scaled;
  const auto t0t1 = qcomm_terms(T0, {T1}, f.one());
  out.push_back(sum_residual("coideal.triangular_1" + tag, ctx,
                             concat(qcomm_terms(T1, qcomm_terms(T1, {P}, q2), f.one()),
                                    scaled(-(pt.k_plus * q * rho), t0t1))));
  out.push_back(sum_residual("coideal.triangular_2" + tag, ctx,
                             concat(qcomm_terms(T0, qcomm_terms(T0, {P}, q2i), f.one()),
                                    scaled(-(pt.k_plus / q * rho), t0t1))));
  out.push_back(sum_residual("coideal.triangular_3" + tag, ctx,
                             concat(qcomm_terms(T1, {T0}, q2i),
                                    {-(pt.eps_plus * pt.eps_minus * (f.one() - q2i)) * g.I})));

  const auto w = ev_onsager(f, p, x);
  const auto W0 = evaluate(w.W0, rep), W1 = evaluate(w.W1, rep);
  const S c = rho * p.k_plus * p.k_minus;
  auto dg = [&](const M& a, const M& b) {
    return concat(qcomm_terms(a, qcomm_terms(a, qcomm_terms(a, {b}, q2i), f.one()), q2),
                  scaled(-c, qcomm_terms(a, {b}, f.one())));
  };
  out.push_back(sum_residual("coideal.dolan_grady_W0" + tag, ctx, dg(W0, W1)));
  out.push_back(sum_residual("coideal.dolan_grady_W1" + tag, ctx, dg(W1, W0)));
  return out;
}

template <class Field>
std::vector<CheckReport> check_coideal_coproduct(const Field& f, const Irrep<ScalarOf<Field>>& rep1,
                                                 const Irrep<ScalarOf<Field>>& rep2,
                                                 const ParamSet<ScalarOf<Field>>& p_in,
                                                 const Spectral<ScalarOf<Field>>& x,
                                                 const Spectral<ScalarOf<Field>>& y, const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  using detail::qcomm;
  auto p = p_in;
  p.k_minus = S(0);
  const std::string tag = "[n=" + std::to_string(rep1.dim) + "," + std::to_string(rep2.dim) + "]";
  const S q = f.q_power(1), q2 = f.q_power(2), d = q2 - f.q_power(-2);
  const auto a = evaluated_gens(f, rep1, p, x);
  const auto b = evaluated_gens(f, rep2, p, y);
  const M I = kron(a.I, b.I);
  auto De = [&](const M& e1, const M& ki1, const M& e2) { return kron(e1, b.I) + kron(ki1, e2); };
  auto Df = [&](const M& f1, const M& f2, const M& k2) { return kron(f1, k2) + kron(a.I, f2); };
  const M e0 = De(a.e0, a.k0i, b.e0), e1 = De(a.e1, a.k1i, b.e1);
  const M f0 = Df(a.f0, b.f0, b.k0), f1 = Df(a.f1, b.f1, b.k1);
  const M k0 = kron(a.k0, b.k0), k1 = kron(a.k1, b.k1);

  const M DT0 = (p.k_plus * q) * (e1 * k1) + p.eps_plus * k1;
  const M DT1 = p.k_plus * f0 + p.eps_minus * k0;
  const M DP = (-d) * ((p.eps_minus * q) * (f1 * k0) + p.eps_plus * e0) +
               (p.k_plus / q) * (qcomm(f1, f0, q2) + qcomm(e1, e0, q2)) + p.p_tilde * I;

  const auto t = ev_triangular(f, p, x);
  const M T0 = evaluate(t.T0, rep1), T1 = evaluate(t.T1, rep1), P = evaluate(t.P1, rep1);
  const M R0 = kron(T0, b.k1) + kron(a.I, (p.k_plus * q) * (b.e1 * b.k1));
  const M R1 = kron(T1, b.k0) + kron(a.I, p.k_plus * b.f0);
  const M RP = kron(P, b.I) - d * (kron(T1, q * (b.f1 * b.k0)) + kron(T0, b.e0)) +
               kron(a.I, (p.k_plus / q) * (qcomm(b.f1, b.f0, q2) + qcomm(b.e1, b.e0, q2)));
  return {equality_residual("coproduct.T0" + tag, ctx, DT0, R0),
          equality_residual("coproduct.T1" + tag, ctx, DT1, R1),
          equality_residual("coproduct.P1" + tag, ctx, DP, RP)};
}

template <class Field>
std::vector<CheckReport> check_onsager_candidate(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                                 const ParamSet<ScalarOf<Field>>& p,
                                                 const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx) {
  const std::string tag = dim_tag(rep.dim);
  const bool generic = !is_zero(p.k_plus) && !is_zero(p.k_minus);
  Matrix<ScalarOf<Field>> k;
  try {
    k = build_K_onsager_candidate(f, rep, p, x);
  } catch (const NumericOnlyError&) {
    const std::string why = "numeric only: ev_x(W1) is not triangular when k_+ k_- != 0";
    return {skipped_report("onsager.W1" + tag, ctx, why), skipped_report("onsager.W0" + tag, ctx, why)};
  }
  const auto at_x = ev_onsager(f, p, x);
  const auto at_xi = ev_onsager(f, p, x.inverse());
  std::vector<CheckReport> out;
  out.push_back(equality_residual("onsager.W1" + tag, ctx, evaluate(at_xi.W1, rep) * k,
                                  k * evaluate(at_x.W1, rep)));
  auto o0 = equality_residual("onsager.W0" + tag, ctx, evaluate(at_xi.W0, rep) * k, k * evaluate(at_x.W0, rep));
  if (generic) {
    const bool zero = o0.exact_zero ? *o0.exact_zero : *o0.residual < ctx.tol;
    o0.finding = true;
    o0.detail = zero ? "candidate intertwines W0" : "candidate does not intertwine W0; " + o0.detail;
    o0.passed = true;
  }
  out.push_back(std::move(o0));
  return out;
}

template <class Field>
CheckReport check_appendix(const Field& f, int id, const Irrep<ScalarOf<Field>>& rep, const ScalarOf<Field>& a,
                           HalfInt b, HalfInt c, const CheckContext& ctx) {
  using S = ScalarOf<Field>;
  using M = Matrix<S>;
  if (id < 1 || id > 13) throw std::invalid_argument("appendix id must be in 1..13");
  static const char* tags[] = {"hadamard", "E.cartan",    "E.E",    "E.F",    "Einv.cartan", "Einv.E",    "Einv.F",
                               "F.cartan", "F.F",         "F.E",    "Finv.cartan", "Finv.F",   "Finv.E"};
  const std::string name = "appendix." + std::string(id < 10 ? "0" : "") + std::to_string(id) + "." + tags[id - 1] +
                           dim_tag(rep.dim);
  const int n = rep.dim;
  const S q = f.q_power(1), qi = f.q_power(-1), lam = q - qi;
  auto H = [&](HalfInt t) { return cartan_power(f, rep, t); };
  auto qp = [&](HalfInt t) { return f.v_power(t.twice); };  // q^t
  auto poch = [&](const S& A, const S& base, int k) {
    S r = f.one(), bj = f.one();
    for (int j = 0; j < k; ++j, bj *= base) r *= f.one() - A * bj;
    return r;
  };
  const HalfInt one = HalfInt::of(1);

  if (id == 1) {
    const S pp = f.q_power(-2);
    auto side = [&](const M& X) {
      const M A = a * (X * H(b));
      const M B = rep.F * H(c) + rep.E * H(c) + S(2) * H(c);
      M bk = B, tot = B;
      S fac = f.one(), pk = f.one();
      for (int k = 1; k <= 2 * n; ++k) {
        bk = A * bk - pk * (bk * A);
        pk *= pp;
        fac *= q_integer(f, pp, k);
        tot += bk * (f.one() / fac);
      }
      return std::pair{q_exp_nilpotent(f, A) * B * q_exp_nilpotent(f, A, true), tot};
    };
    const auto [le, re] = side(rep.E);
    const auto [lf, rf] = side(rep.F);
    return equality_residual(name, ctx, detail::direct_sum(le, lf), detail::direct_sum(re, rf));
  }

  // ids 2..13: families of three (Cartan, same, opposite middle factor) for
  // exp(X) . exp^{-1}(X) and exp^{-1}(X) . exp(X), X = a E q^{bH} then a F q^{bH}.
  const int i = id - 2;
  const bool useF = i >= 6;
  const bool inv = (i / 3) % 2 == 1;
  const int kind = i % 3;
  const int sg = useF ? -1 : 1;
  const M& same = useF ? rep.F : rep.E;
  const M& other = useF ? rep.E : rep.F;
  const M X = a * (same * H(b));
  const M L = q_exp_nilpotent(f, X, inv), R = q_exp_nilpotent(f, X, !inv);
  const S base = inv ? f.q_power(2) : f.q_power(-2);
  const S ycoef = inv ? -(a * (f.one() - f.q_power(2))) : a * (f.one() - f.q_power(-2));
  const M Y = ycoef * (same * H(b));
  auto twice_sg = [&](HalfInt t) { return sg == 1 ? t + t : -(t + t); };  // 2 sg t

  const M mid = kind == 0 ? H(c) : (kind == 1 ? same * H(c) : other * H(c));
  // lhs first, then the right-hand side summand by summand with a minus sign.
  std::vector<M> terms{L * mid * R};
  const int N = n + 2;
  M yj = M::identity(static_cast<std::size_t>(n));
  if (kind < 2) {
    const S A = qp(kind == 0 ? twice_sg(c) : twice_sg(c + (-b)));
    const M tail = kind == 0 ? H(c) : same * H(c);
    for (int j = 0; j < N; ++j) {
      terms.push_back(-(poch(A, base, j) / poch(base, base, j)) * (yj * tail));
      yj = yj * Y;
    }
  } else {
    const M C = casimir(f, rep);
    const HalfInt bc = b + c;
    const S pre = ycoef * qp(-twice_sg(b));
    const S lam2 = lam * lam;
    terms.push_back(-(other * H(c)));
    for (int j = 1; j < N; ++j) {
      const S w = pre / poch(base, base, j);
      terms.push_back(-(w * poch(qp(twice_sg(bc)), base, j)) * (yj * C * H(bc)));
      terms.push_back((w * poch(qp(twice_sg(bc + one)), base, j) * f.q_power(-sg) / lam2) * (yj * H(bc + one)));
      terms.push_back((w * poch(qp(twice_sg(bc + (-one))), base, j) * f.q_power(sg) / lam2) *
                      (yj * H(bc + (-one))));
      yj = yj * Y;
    }
  }
  return sum_residual(name, ctx, terms);
}

#define INSTANTIATE(F)                                                                                             \
  template std::vector<CheckReport> check_coideal_algebras<F>(const F&, const Irrep<F::Scalar>&,                  \
                                                              const ParamSet<F::Scalar>&, const Spectral<F::Scalar>&, \
                                                              const CheckContext&);                                \
  template std::vector<CheckReport> check_coideal_coproduct<F>(                                                    \
      const F&, const Irrep<F::Scalar>&, const Irrep<F::Scalar>&, const ParamSet<F::Scalar>&,                      \
      const Spectral<F::Scalar>&, const Spectral<F::Scalar>&, const CheckContext&);                                \
  template std::vector<CheckReport> check_onsager_candidate<F>(const F&, const Irrep<F::Scalar>&,                 \
                                                               const ParamSet<F::Scalar>&,                         \
                                                               const Spectral<F::Scalar>&, const CheckContext&);   \
  template CheckReport check_appendix<F>(const F&, int, const Irrep<F::Scalar>&, const F::Scalar&, HalfInt,       \
                                         HalfInt, const CheckContext&);
REFL_INSTANTIATE(INSTANTIATE)
#undef INSTANTIATE

}  // namespace refl
