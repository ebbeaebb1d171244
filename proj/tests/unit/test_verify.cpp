#include "doctest.h"
#include "oracles.hpp"
#include "refl/lops/lops.hpp"
#include "refl/verify/checks.hpp"

using namespace refl;
using namespace oracle;

namespace {
const ExactField F;
using RF = RationalFunction;
using Sp = Spectral<RF>;
const CheckContext ctx{};

ParamSet<mpq_class> rational(int s0, int s1, mpq_class kp, mpq_class km) {
  ParamSet<mpq_class> p;
  p.eps_plus = mpq_class(-7, 4);
  p.eps_minus = mpq_class(2, 5);
  p.k_plus = kp;
  p.k_minus = km;
  p.p_tilde = mpq_class(-3, 2);
  p.s0 = s0;
  p.s1 = s1;
  return p;
}

const auto generic = rational(1, 2, mpq_class(5, 3), mpq_class(-1, 6));

Sp qx(int m) { return Sp::from_q_exponent(F, m); }

void all_zero(const std::vector<CheckReport>& rs) {
  REQUIRE(!rs.empty());
  for (const auto& r : rs) {
    INFO(r.name << " " << r.detail);
    CHECK(r.exact_zero.value_or(false));
    CHECK(r.passed);
  }
}
}  // namespace

TEST_CASE("representation checks, trivial module and Serre at n = 3") {
  const auto p = to_field(F, generic);
  all_zero(check_representation(F, make_irrep(F, 1), p, qx(2), ctx));
  all_zero(check_representation(F, make_irrep(F, 3), p, qx(-1), ctx));
  all_zero(check_symmetries(F, make_irrep(F, 1), p, qx(1), ctx));
  all_zero(check_symmetries(F, make_irrep(F, 2), p, qx(3), ctx));
  all_zero(check_R_reduction(F, p, qx(-2), ctx));
}

TEST_CASE("Yang-Baxter equations") {
  const auto p = to_field(F, generic);
  const auto r2 = make_irrep(F, 2), r3 = make_irrep(F, 3);
  all_zero({check_ybe(F, YbeKind::RRR, r2, p, qx(1), qx(1), qx(1), ctx)});
  all_zero({check_ybe(F, YbeKind::LLR, r3, p, qx(2), qx(1), qx(3), ctx)});
  all_zero({check_ybe(F, YbeKind::LbLbRb, r2, p, qx(-1), qx(2), qx(0), ctx)});
  all_zero({check_ybe(F, YbeKind::RbRbRb, r2, p, qx(3), qx(-2), qx(1), ctx)});
}

TEST_CASE("reflection equations") {
  const auto p = to_field(F, generic);
  all_zero({check_reflection_matrix(F, p, qx(0), qx(0), ctx)});
  all_zero({check_reflection_matrix(F, p, qx(2), qx(-1), ctx)});
  all_zero({check_reflection_operator(F, Variant::upper, make_irrep(F, 3), p, qx(1), qx(2), ctx)});
  for (Variant v : {Variant::diagonal, Variant::lower, Variant::upper_alt, Variant::lower_alt})
    all_zero({check_reflection_operator(F, v, make_irrep(F, 2), p, qx(2), qx(-1), ctx)});
  all_zero({check_reflection_oracle(F, Variant::lower, p, qx(1), qx(3), ctx)});
}

TEST_CASE("a perturbed K-matrix fails the matrix reflection equation") {
  const NumericField nf(Complex(1.4, 0.3));
  auto p = to_field(nf, generic);
  const auto x = Spectral<Complex>::from_value(Complex(0.8, 0.5)), y = Spectral<Complex>::from_value(Complex(1.2, -0.2));
  CHECK(check_reflection_matrix(nf, p, x, y, ctx).passed);

  // Same sides with K(x) off by 1e-3 in one entry.
  using M = Matrix<Complex>;
  M k = build_K_scalar(nf, p, x);
  k(0, 1) += 1e-3;
  const M k1 = kron(k, M::identity(2)), k2 = kron(M::identity(2), build_K_scalar(nf, p, y));
  auto L = [&](const Spectral<Complex>& w, bool bar) { return build_R(nf, p, w, bar); };
  const M lhs = L(y / x, false) * k1 * L(x * y, true) * k2;
  const M rhs = k2 * L((x * y).inverse(), false) * k1 * L(x / y, true);
  const auto rep = equality_residual("perturbed", ctx, lhs, rhs);
  CHECK(!rep.passed);
  CHECK(*rep.residual > 1e-6);
}

TEST_CASE("intertwining, lemmas and K-operator forms") {
  const auto p = to_field(F, generic);
  all_zero(check_intertwining(F, Variant::upper, make_irrep(F, 2), p, qx(1), ctx));
  for (Variant v : {Variant::diagonal, Variant::lower, Variant::upper_alt, Variant::lower_alt})
    all_zero(check_intertwining(F, v, make_irrep(F, 3), p, qx(-2), ctx));
  all_zero(check_aux_lemmas(F, make_irrep(F, 3), p, qx(2), ctx));
  all_zero(check_aux_lemmas(F, make_irrep(F, 4), p, qx(-1), ctx));
  all_zero(check_k_forms(F, make_irrep(F, 3), p, qx(1), ctx));
  all_zero(check_fundamental_K(F, p, qx(3), ctx));
}

TEST_CASE("coideal relations and coproducts") {
  const auto p = to_field(F, generic);
  all_zero(check_coideal_algebras(F, make_irrep(F, 2), p, qx(1), ctx));
  all_zero(check_coideal_algebras(F, make_irrep(F, 3), p, qx(-1), ctx));
  all_zero(check_coideal_coproduct(F, make_irrep(F, 2), make_irrep(F, 3), p, qx(1), qx(2), ctx));
}

TEST_CASE("appendix identities") {
  const auto r3 = make_irrep(F, 3), r4 = make_irrep(F, 4);
  for (int id = 1; id <= 13; ++id) all_zero({check_appendix(F, id, r3, r(0), HalfInt{1}, HalfInt{-3}, ctx)});
  all_zero({check_appendix(F, 1, r3, r(1), HalfInt::of(1), HalfInt::of(1), ctx)});
  all_zero({check_appendix(F, 3, r4, r(2, 3), HalfInt{1}, HalfInt::of(1), ctx)});
  all_zero({check_appendix(F, 4, r4, r(2, 3), HalfInt{1}, HalfInt::of(1), ctx)});
  CHECK_THROWS(check_appendix(F, 14, r3, r(1), HalfInt{1}, HalfInt{1}, ctx));
}

TEST_CASE("Onsager candidate") {
  const auto r2 = make_irrep(F, 2);
  // Exact backend, k+ k- != 0: no eigenvalues in the field.
  for (const auto& rep : check_onsager_candidate(F, r2, to_field(F, generic), qx(1), ctx)) {
    CHECK(rep.skipped);
    CHECK(rep.passed);
  }
  // Degenerations are exact zeros and not findings.
  for (auto [kp, km] : {std::pair{mpq_class(5, 3), mpq_class(0)}, std::pair{mpq_class(0), mpq_class(-1, 6)}}) {
    const auto rs = check_onsager_candidate(F, make_irrep(F, 3), to_field(F, rational(1, 2, kp, km)), qx(2), ctx);
    all_zero(rs);
    for (const auto& r : rs) CHECK(!r.finding);
  }
  // Numeric, generic: W1 is intertwined, W0 is not.
  const NumericField nf(Complex(1.4, 0.0));
  const auto rs = check_onsager_candidate(nf, make_irrep(nf, 2), to_field(nf, generic),
                                          Spectral<Complex>::from_value(Complex(0.9, 0.6)), ctx);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].name == "onsager.W1[n=2]");
  CHECK(*rs[0].residual < 1e-10);
  CHECK(rs[1].name == "onsager.W0[n=2]");
  CHECK(*rs[1].residual > 1e-3);
  CHECK(rs[1].finding);
  CHECK(rs[1].passed);
}

TEST_CASE("exact residual reports the first nonzero entry") {
  const auto rep = equality_residual("demo", ctx, diag({r(1), r(2)}), diag({r(1), r(3)}));
  CHECK(!*rep.exact_zero);
  CHECK(!rep.passed);
  CHECK(rep.detail.find("(1,1)") != std::string::npos);
}
