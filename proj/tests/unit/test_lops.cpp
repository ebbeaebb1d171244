#include "doctest.h"
#include "oracles.hpp"
#include "refl/lops/lops.hpp"

using namespace refl;
using namespace oracle;

namespace {
const ExactField F;
using RF = RationalFunction;
using Sp = Spectral<RF>;

ParamSet<RF> params(int s0, int s1) {
  ParamSet<RF> p;
  p.eps_plus = r(3, 2);
  p.eps_minus = r(-5);
  p.k_plus = r(2, 7);
  p.k_minus = r(-4, 3);
  p.s0 = s0;
  p.s1 = s1;
  return p;
}

// R(x) typed in entry by entry, x = q^m.
Matrix<RF> r_literal(int m, int s0, int s1) {
  const RF xs = q(m * (s0 + s1)), lam = q() - q(-1);
  Matrix<RF> R(4);
  R(0, 0) = R(3, 3) = q() - q(-1) * xs;
  R(1, 1) = R(2, 2) = r(1) - xs;
  R(1, 2) = lam * q(m * s1);
  R(2, 1) = lam * q(m * s0);
  return R;
}
}  // namespace

TEST_CASE("fundamental L reproduces the 6-vertex R-matrix") {
  const auto pi = make_irrep(F, 2);
  for (int m : {-2, 1, 3})
    for (auto [s0, s1] : {std::pair{0, 1}, std::pair{2, -1}, std::pair{1, 1}}) {
      const auto p = params(s0, s1);
      const Sp x = Sp::from_q_exponent(F, m);
      CHECK(equal(F.v_power(1) * build_L(F, pi, p, x, false), r_literal(m, s0, s1)));
      CHECK(equal(build_R(F, p, x, false), r_literal(m, s0, s1)));
    }
}

TEST_CASE("L on the trivial module") {
  const auto p = params(1, 2);
  const Sp x = Sp::from_q_exponent(F, 2);
  const RF d = r(1) - q(-1) * q(6);
  CHECK(equal(build_L(F, make_irrep(F, 1), p, x, false), diag({d, d})));
}

TEST_CASE("R with s = 0 has a vanishing middle diagonal") {
  const auto R = build_R(F, params(0, 0), Sp::from_q_exponent(F, 3), false);
  CHECK(R(1, 1).is_zero());
  CHECK(R(2, 2).is_zero());
  CHECK(R(0, 0) == q() - q(-1));
}

TEST_CASE("sigma (x) sigma fixes R") {
  for (auto [s0, s1] : {std::pair{0, 1}, std::pair{2, -1}}) {
    const auto p = params(s0, s1);
    const Sp x = Sp::from_q_exponent(F, 2);
    CHECK(equal(sigma_2x2(build_R(F, sigma_params(p), x, false)), build_R(F, p, x, false)));
    // iota (x) iota is the transpose and maps R(x) to Rbar(1/x)
    CHECK(equal(build_R(F, p, x, false).transpose(), build_R(F, p, x.inverse(), true)));
  }
}

TEST_CASE("scalar K-matrix") {
  const auto p = params(1, 2);
  const auto k1 = build_K_scalar(F, p, Sp::from_q_exponent(F, 0));
  CHECK(equal(k1, (p.eps_plus + p.eps_minus) * Matrix<RF>::identity(2)));

  auto pd = p;
  pd.k_plus = pd.k_minus = r(0);
  const int m = 2;
  const auto kd = build_K_scalar(F, pd, Sp::from_q_exponent(F, m));
  CHECK(equal(kd, diag({q(m) * p.eps_plus + q(-2 * m) * p.eps_minus, q(-m) * p.eps_plus + q(2 * m) * p.eps_minus})));

  const auto kg = build_K_scalar(F, p, Sp::from_q_exponent(F, m));
  CHECK(kg(0, 1) == p.k_plus * (q(3 * m) - q(-3 * m)) / (q() - q(-1)));
  CHECK(kg(1, 0) == p.k_minus * (q(3 * m) - q(-3 * m)) / (q() - q(-1)));
}
