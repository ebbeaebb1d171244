#include "doctest.h"
#include "oracles.hpp"
#include "refl/repr/evaluation.hpp"

using namespace refl;
using namespace oracle;

namespace {
const ExactField F;
using RF = RationalFunction;
using Sp = Spectral<RF>;
}  // namespace

TEST_CASE("irrep matrices for n = 1, 2, 3") {
  const auto r1 = make_irrep(F, 1);
  CHECK(r1.E(0, 0).is_zero());
  CHECK(r1.weights == std::vector<int>{0});

  const auto r2 = make_irrep(F, 2);
  CHECK(equal(r2.E, unit(2, 0, 1)));
  CHECK(equal(r2.F, unit(2, 1, 0)));
  CHECK(r2.weights == std::vector<int>{1, -1});

  const auto r3 = make_irrep(F, 3);
  const RF two = q() + q(-1);
  CHECK(equal(r3.E * r3.F - r3.F * r3.E, diag({two, r(0), -two})));
  CHECK_THROWS(make_irrep(F, 0));
}

TEST_CASE("q^{xi H}") {
  const auto r2 = make_irrep(F, 2), r3 = make_irrep(F, 3);
  CHECK(equal(cartan_power(F, r2, HalfInt::of(1)), diag({q(), q(-1)})));
  CHECK(equal(cartan_power(F, r3, HalfInt{1}), diag({q(), r(1), q(-1)})));
  for (int n = 1; n <= 5; ++n) {
    const auto rep = make_irrep(F, n);
    CHECK(equal(cartan_power(F, rep, HalfInt{0}), Matrix<RF>::identity(n)));
  }
}

TEST_CASE("Casimir value and forms") {
  const RF lam2 = (q() - q(-1)) * (q() - q(-1));
  CHECK(equal(casimir(F, make_irrep(F, 1)), diag({(q() + q(-1)) / lam2})));
  const RF c2 = (q(2) + q(-2)) / lam2;
  CHECK(equal(casimir(F, make_irrep(F, 2)), diag({c2, c2})));
  const auto r4 = make_irrep(F, 4);
  CHECK(equal(casimir(F, r4), casimir_ef_form(F, r4)));
}

TEST_CASE("evaluation map examples") {
  ParamSet<RF> p;
  p.s0 = 1;
  const auto r2 = make_irrep(F, 2);
  const Sp x = Sp::from_q_exponent(F, 3);
  CHECK(equal(eval_generator(F, r2, p, {Generator::e0}, x), q(3) * unit(2, 1, 0)));

  p.s1 = 2;
  const auto r3 = make_irrep(F, 3);
  CHECK(equal(eval_generator(F, r3, p, {Generator::e1}, Sp::from_q_exponent(F, 1)), q(2) * r3.E));
  CHECK(equal(eval_generator(F, r3, p, {Generator::k0, HalfInt{0}}, x), Matrix<RF>::identity(3)));
  // h0 evaluates to -H.
  CHECK(equal(eval_generator(F, r2, p, {Generator::k0, HalfInt::of(1)}, x), diag({q(-1), q()})));
}

TEST_CASE("sigma and iota on U_q(sl2) elements") {
  using A = AlgebraElement<RF>;
  const auto r2 = make_irrep(F, 2);
  CHECK(equal(evaluate(apply_map(F, Involution::sigma, A::E()), r2), unit(2, 1, 0)));
  for (int n = 2; n <= 4; ++n) {
    const auto rep = make_irrep(F, n);
    const auto k = q_cartan(F, HalfInt{3});
    CHECK(equal(evaluate(apply_map(F, Involution::iota, k), rep), cartan_power(F, rep, HalfInt{3})));
    CHECK(equal(evaluate(apply_map(F, Involution::iota, A::E() * A::F()), rep), rep.E * rep.F));
    // sigma is an involution, iota squares to the identity on generators
    const A x = A::E() * q_cartan(F, HalfInt{1}) + r(3) * A::F();
    CHECK(equal(evaluate(apply_map(F, Involution::sigma, apply_map(F, Involution::sigma, x)), rep), evaluate(x, rep)));
    CHECK(equal(evaluate(apply_map(F, Involution::iota, apply_map(F, Involution::iota, x)), rep), evaluate(x, rep)));
  }
}

TEST_CASE("half-integers") {
  CHECK(HalfInt::from_rational(mpq_class(3, 2)).twice == 3);
  CHECK_THROWS(HalfInt::from_rational(mpq_class(1, 3)));
  CHECK(HalfInt{-3}.to_string() == "-3/2");
  CHECK(HalfInt::of(2).to_string() == "2");
}
