#include "doctest.h"
#include "oracles.hpp"
#include "refl/kops/kops.hpp"
#include "refl/lops/lops.hpp"

using namespace refl;
using namespace oracle;

namespace {
const ExactField F;
using RF = RationalFunction;
using Sp = Spectral<RF>;

ParamSet<mpq_class> rational(int s0, int s1, mpq_class kp = mpq_class(2, 7), mpq_class km = 0) {
  ParamSet<mpq_class> p;
  p.eps_plus = mpq_class(3, 2);
  p.eps_minus = -5;
  p.k_plus = kp;
  p.k_minus = km;
  p.p_tilde = mpq_class(1, 3);
  p.s0 = s0;
  p.s1 = s1;
  return p;
}

// (a; b)_N with N large, |b| < 1.
Complex truncated(Complex a, Complex b, int terms = 40) {
  Complex r = 1.0, bj = 1.0;
  for (int j = 0; j < terms; ++j, bj *= b) r *= 1.0 - a * bj;
  return r;
}
}  // namespace

TEST_CASE("q-exponential of nilpotent matrices") {
  const auto r2 = make_irrep(F, 2), r4 = make_irrep(F, 4);
  CHECK(equal(q_exp_nilpotent(F, Matrix<RF>(3)), Matrix<RF>::identity(3)));
  const RF a = r(5, 3);
  const Matrix<RF> m2 = a * (r2.E * cartan_power(F, r2, HalfInt::of(1)));
  CHECK(equal(q_exp_nilpotent(F, m2), Matrix<RF>::identity(2) + m2));
  const Matrix<RF> m4 = a * (r4.E * cartan_power(F, r4, HalfInt::of(1)));
  CHECK(equal(q_exp_nilpotent(F, m4) * q_exp_nilpotent(F, m4, true), Matrix<RF>::identity(4)));
  CHECK_THROWS_WITH(q_exp_nilpotent(F, Matrix<RF>::identity(2)), doctest::Contains("not nilpotent"));
}

TEST_CASE("K0 entries") {
  const auto p = to_field(F, rational(1, 1));
  const auto r3 = make_irrep(F, 3);
  CHECK(equal(build_K0_diagonal(F, r3, p, Sp::from_q_exponent(F, 0), CartanSign::minusH),
              Matrix<RF>::identity(3)));

  // n = 2, x = q, s = 2, weight h = 1: (1 + r)(1 + r q^{-2}) with r = eps-/eps+.
  const RF ratio = p.eps_minus / p.eps_plus;
  const RF entry = k0_entry(F, p, Sp::from_q_exponent(F, 1), CartanSign::minusH, 1);
  CHECK(entry == (r(1) + ratio) * (r(1) + ratio * q(-2)));

  // Against a 40-term product ratio at a numeric q.
  const Complex qn(1.7, 0.4);
  const Complex A = -(-5.0 / 1.5) * std::pow(qn, -2), xs = qn * qn;
  const Complex expect = truncated(A * xs, 1.0 / (qn * qn)) / truncated(A / xs, 1.0 / (qn * qn));
  CHECK(std::abs(entry.evaluate(std::sqrt(qn)) - expect) < 1e-10 * std::abs(expect));
}

TEST_CASE("kappa against truncated products") {
  const Complex qn(1.6, -0.3);
  for (auto [m, s0, s1] : {std::tuple{1, 0, 1}, std::tuple{2, 1, 0}, std::tuple{-1, 2, 1}}) {
    const auto p = to_field(F, rational(s0, s1));
    const RF k = kappa(F, p, Sp::from_q_exponent(F, m));
    const Complex rr = -5.0 / 1.5, pq = 1.0 / (qn * qn), xs = std::pow(qn, m * (s0 + s1));
    const Complex expect = truncated(-rr * xs * pq, pq) / (1.5 * truncated(-rr / xs, pq));
    CHECK(std::abs(k.evaluate(std::sqrt(qn)) - expect) < 1e-10 * std::abs(expect));
  }
  // x = q with s = 1: the two products coincide.
  const auto p = to_field(F, rational(0, 1));
  CHECK(kappa(F, p, Sp::from_q_exponent(F, 1)) == r(2, 3));
  CHECK(kappa(F, p, Sp::from_q_exponent(F, 0)) == r(1) / (p.eps_plus + p.eps_minus));
}

TEST_CASE("upper and lower K-operators on the fundamental module") {
  const auto pi = make_irrep(F, 2);
  for (int m : {-1, 2}) {
    const Sp x = Sp::from_q_exponent(F, m);
    const auto pu = to_field(F, rational(1, 0, mpq_class(2, 7), 0));
    const auto ku = build_K(F, pi, KOperatorSpec<RF>{Variant::upper, pu, x});
    CHECK(equal(ku, kappa(F, pu, x) * build_K_scalar(F, pu, x)));
    CHECK(ku(0, 0) / kappa(F, pu, x) == q(m) * pu.eps_plus + pu.eps_minus);

    const auto pl = to_field(F, rational(1, 0, 0, mpq_class(-4, 3)));
    CHECK(equal(build_K(F, pi, KOperatorSpec<RF>{Variant::lower, pl, x}), kappa(F, pl, x) * build_K_scalar(F, pl, x)));
  }
}

TEST_CASE("k = 0 gives the diagonal solution") {
  const auto p = to_field(F, rational(2, -1, 0, 0));
  const auto r3 = make_irrep(F, 3);
  const Sp x = Sp::from_q_exponent(F, 2);
  const auto diagonal = spectral_cartan(r3, x, 2) * build_K0_diagonal(F, r3, p, x, CartanSign::minusH);
  CHECK(equal(build_K(F, r3, KOperatorSpec<RF>{Variant::upper, p, x}), diagonal));
  CHECK(equal(build_K(F, r3, KOperatorSpec<RF>{Variant::diagonal, p, x}), diagonal));
  CHECK(equal(build_K_unfactored(F, r3, KOperatorSpec<RF>{Variant::upper, p, x}), diagonal));
}

TEST_CASE("factored, unfactored and conjugated forms of the upper K-operator") {
  const auto p = to_field(F, rational(1, 1));
  const Sp x = Sp::from_q_exponent(F, -1);
  const auto r3 = make_irrep(F, 3), r2 = make_irrep(F, 2);
  const KOperatorSpec<RF> spec{Variant::upper, p, x};
  CHECK(equal(build_K(F, r3, spec), build_K_unfactored(F, r3, spec)));
  CHECK(equal(build_K(F, r2, spec), build_K_conjugated(F, r2, p, x)));
}

TEST_CASE("variant constraints") {
  const auto p = to_field(F, rational(1, 1, mpq_class(1, 2), mpq_class(1, 3)));
  const Sp x = Sp::from_q_exponent(F, 1);
  const auto r2 = make_irrep(F, 2);
  CHECK_THROWS_WITH(build_K(F, r2, KOperatorSpec<RF>{Variant::upper, p, x}),
                    doctest::Contains("requires k_minus = 0"));
  CHECK_THROWS(build_K(F, r2, KOperatorSpec<RF>{Variant::lower, p, x}));
  auto bad = p;
  bad.eps_plus = r(0);
  CHECK_THROWS_WITH(build_K0_diagonal(F, r2, bad, x, CartanSign::minusH), "eps_plus must be nonzero");
  CHECK(parse_variant("upper_alt") == Variant::upper_alt);
  CHECK(!parse_variant("sideways"));
  CHECK(to_string(Variant::onsager_candidate) == "onsager_candidate");
}

TEST_CASE("Onsager candidate degenerates to the triangular operators") {
  const Sp x = Sp::from_q_exponent(F, 2);
  const auto r3 = make_irrep(F, 3);
  const auto pu = to_field(F, rational(1, 1, mpq_class(2, 7), 0));
  CHECK(equal(build_K_onsager_candidate(F, r3, pu, x), build_K(F, r3, KOperatorSpec<RF>{Variant::upper, pu, x})));
  const auto pl = to_field(F, rational(1, 1, 0, mpq_class(2, 7)));
  CHECK(equal(build_K_onsager_candidate(F, r3, pl, x), build_K(F, r3, KOperatorSpec<RF>{Variant::lower, pl, x})));
  const auto pg = to_field(F, rational(1, 1, mpq_class(2, 7), mpq_class(-1, 2)));
  CHECK_THROWS_AS(build_K_onsager_candidate(F, r3, pg, x), NumericOnlyError);
}
