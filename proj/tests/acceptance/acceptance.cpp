// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "refl/cli/suite.hpp"
#include "refl/lops/lops.hpp"
#include "refl/verify/checks.hpp"

using namespace refl;

namespace {

const ExactField EF;
using RF = RationalFunction;
using Sp = Spectral<RF>;

struct Tally {
  int checks = 0;
  int failures = 0;
  std::string first;
  std::string note;

  void add(const CheckReport& r, bool ok) {
    ++checks;
    if (!ok) {
      if (failures++ == 0) first = r.name + " " + r.params.dump() + " " + r.detail;
    }
  }
  // Exact zero required.
  void exact(const CheckReport& r) { add(r, r.exact_zero.value_or(false)); }
  void exact(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs) exact(r);
  }
};

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  mpq_class rational() {
    mpq_class r(uniform(1, 20), uniform(1, 20));
    r.canonicalize();
    return uniform(0, 1) ? r : mpq_class(-r);
  }
  RationalParams params() {
    RationalParams p;
    do {
      p.eps_plus = rational();
      p.eps_minus = rational();
    } while (abs(p.eps_plus) == abs(p.eps_minus));
    p.k_plus = rational();
    p.k_minus = rational();
    p.p_tilde = rational();
    p.s0 = uniform(-1, 2);
    p.s1 = uniform(-1, 2);
    return p;
  }
  int exponent() { return uniform(-2, 3); }
  Complex spectral() {
    const double mod = std::uniform_real_distribution<double>(0.6, 1.6)(rng_);
    const double arg = std::uniform_real_distribution<double>(-3.14159, 3.14159)(rng_);
    return std::polar(mod, arg);
  }

 private:
  std::mt19937_64 rng_;
};

CheckContext ctx_for(const RationalParams& p, int n) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["params"] = describe(p);
  return {j, 1e-9};
}

RationalParams with_k(RationalParams p, Variant v) {
  if (v == Variant::upper || v == Variant::lower_alt || v == Variant::diagonal) p.k_minus = 0;
  if (v == Variant::lower || v == Variant::upper_alt || v == Variant::diagonal) p.k_plus = 0;
  return p;
}

const Variant kVariants[] = {Variant::upper, Variant::lower, Variant::upper_alt, Variant::lower_alt,
                             Variant::diagonal};

int failed_criteria = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Tally()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  try {
    t = body();
  } catch (const std::exception& e) {
    t.failures = 1;
    t.first = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = t.failures == 0 && s < limit_s;
  if (!ok) ++failed_criteria;
  std::printf("criterion %2d %-4s  %-34s %5d checks  %8.2f s (limit %g s)%s%s\n", id, ok ? "PASS" : "FAIL", title,
              t.checks, s, limit_s, t.note.empty() ? "" : "  ", t.note.c_str());
  if (t.failures) std::printf("    %d failures, first: %s\n", t.failures, t.first.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "representation sanity", 5, [] {
    Tally t;
    for (int n = 1; n <= 6; ++n) {
      const auto rep = make_irrep(EF, n);
      for (int s0 = -1; s0 <= 2; ++s0)
        for (int s1 = -1; s1 <= 2; ++s1) {
          RationalParams p;
          p.s0 = s0;
          p.s1 = s1;
          t.exact(check_representation(EF, rep, to_field(EF, p), Sp::from_q_exponent(EF, 2), ctx_for(p, n)));
        }
    }
    return t;
  });

  criterion(2, "fundamental R reductions", 5, [] {
    Tally t;
    Draws d(2);
    for (int s0 = -1; s0 <= 2; ++s0)
      for (int s1 = -1; s1 <= 2; ++s1)
        for (int m = -2; m <= 3; ++m) {
          RationalParams p = d.params();
          p.s0 = s0;
          p.s1 = s1;
          t.exact(check_R_reduction(EF, to_field(EF, p), Sp::from_q_exponent(EF, m), ctx_for(p, 2)));
        }
    return t;
  });

  criterion(3, "Yang-Baxter equations", 60, [] {
    Tally t;
    Draws d(3);
    for (int n : {2, 3}) {
      const auto rep = make_irrep(EF, n);
      for (int i = 0; i < 10; ++i) {
        const auto p = d.params();
        const Sp x = Sp::from_q_exponent(EF, d.exponent()), y = Sp::from_q_exponent(EF, d.exponent()),
                 z = Sp::from_q_exponent(EF, d.exponent());
        for (YbeKind k : {YbeKind::RRR, YbeKind::RbRbRb, YbeKind::LLR, YbeKind::LbLbRb})
          t.exact(check_ybe(EF, k, rep, to_field(EF, p), x, y, z, ctx_for(p, n)));
      }
    }
    return t;
  });

  criterion(4, "matrix reflection equation", 10, [] {
    Tally t;
    Draws d(4);
    for (int i = 0; i < 20; ++i) {
      const auto p = d.params();  // k+ and k- are both nonzero by construction
      t.exact(check_reflection_matrix(EF, to_field(EF, p), Sp::from_q_exponent(EF, d.exponent()),
                                      Sp::from_q_exponent(EF, d.exponent()), ctx_for(p, 2)));
    }
    return t;
  });

  criterion(5, "operator reflection equation", 300, [] {
    Tally t;
    Draws d(5);
    for (Variant v : kVariants)
      for (int n : {2, 3, 4}) {
        const auto rep = make_irrep(EF, n);
        for (int i = 0; i < 10; ++i) {
          const auto p = with_k(d.params(), v);
          t.exact(check_reflection_operator(EF, v, rep, to_field(EF, p), Sp::from_q_exponent(EF, d.exponent()),
                                            Sp::from_q_exponent(EF, d.exponent()), ctx_for(p, n)));
        }
      }
    return t;
  });

  criterion(6, "intertwining relations", 120, [] {
    Tally t;
    Draws d(6);
    for (Variant v : kVariants)
      for (int n : {2, 3, 4}) {
        const auto rep = make_irrep(EF, n);
        for (int i = 0; i < 10; ++i) {
          const auto p = with_k(d.params(), v);
          t.exact(check_intertwining(EF, v, rep, to_field(EF, p), Sp::from_q_exponent(EF, d.exponent()),
                                     ctx_for(p, n)));
        }
      }
    return t;
  });

  criterion(7, "fundamental K reduction", 5, [] {
    Tally t;
    Draws d(7);
    for (int i = 0; i < 20; ++i) {
      const auto p = d.params();
      t.exact(check_fundamental_K(EF, to_field(EF, p), Sp::from_q_exponent(EF, d.exponent()), ctx_for(p, 2)));
    }
    return t;
  });

  criterion(8, "K-operator form equivalence", 30, [] {
    Tally t;
    Draws d(8);
    for (int n = 1; n <= 4; ++n) {
      const auto rep = make_irrep(EF, n);
      for (int i = 0; i < 5; ++i) {
        const auto p = d.params();
        t.exact(check_k_forms(EF, rep, to_field(EF, p), Sp::from_q_exponent(EF, d.exponent()), ctx_for(p, n)));
      }
    }
    return t;
  });

  criterion(9, "coideal algebras and coproducts", 60, [] {
    Tally t;
    Draws d(9);
    for (int i = 0; i < 5; ++i) {
      const auto p = d.params();
      const auto fp = to_field(EF, p);
      const Sp x = Sp::from_q_exponent(EF, d.exponent()), y = Sp::from_q_exponent(EF, d.exponent());
      for (int n = 1; n <= 4; ++n) t.exact(check_coideal_algebras(EF, make_irrep(EF, n), fp, x, ctx_for(p, n)));
      for (int n : {2, 3})
        for (int m : {2, 3})
          t.exact(check_coideal_coproduct(EF, make_irrep(EF, n), make_irrep(EF, m), fp, x, y, ctx_for(p, n)));
    }
    return t;
  });

  criterion(10, "appendix identities", 120, [] {
    Tally t;
    Draws d(10);
    for (int i = 0; i < 5; ++i) {
      const mpq_class a = d.rational();
      const HalfInt b{d.uniform(-3, 3)}, c{d.uniform(-3, 3)};
      for (int n : {2, 3, 4}) {
        const auto rep = make_irrep(EF, n);
        nlohmann::ordered_json j{{"n", n}, {"a", a.get_str()}, {"b", b.to_string()}, {"c", c.to_string()}};
        for (int id = 1; id <= 13; ++id) t.exact(check_appendix(EF, id, rep, RF(a), b, c, CheckContext{j, 1e-9}));
      }
    }
    return t;
  });

  criterion(11, "Onsager candidate finding", 30, [] {
    Tally t;
    Draws d(11);
    const NumericField nf(Complex(1.4, 0.0));
    double min_o0 = 1e300, max_o1 = 0;
    for (int i = 0; i < 10; ++i) {
      auto p = d.params();
      // s = 0 makes the candidate independent of x; keep the spectral dependence.
      while (p.s0 + p.s1 == 0) p.s1 = d.uniform(-1, 2);
      const auto x = Spectral<Complex>::from_value(d.spectral());
      for (int n : {2, 3}) {
        const auto rs = check_onsager_candidate(nf, make_irrep(nf, n), to_field(nf, p), x, ctx_for(p, n));
        max_o1 = std::max(max_o1, *rs[0].residual);
        min_o0 = std::min(min_o0, *rs[1].residual);
        t.add(rs[0], *rs[0].residual < 1e-10);
        t.add(rs[1], *rs[1].residual > 1e-6 && rs[1].finding && rs[1].passed);
      }
      // Degenerations, exactly and numerically.
      for (int which : {0, 1}) {
        auto pd = p;
        (which == 0 ? pd.k_minus : pd.k_plus) = 0;
        const Sp xe = Sp::from_q_exponent(EF, d.exponent());
        for (int n : {2, 3}) {
          t.exact(check_onsager_candidate(EF, make_irrep(EF, n), to_field(EF, pd), xe, ctx_for(pd, n)));
          for (const auto& r : check_onsager_candidate(nf, make_irrep(nf, n), to_field(nf, pd), x, ctx_for(pd, n)))
            t.add(r, *r.residual < 1e-10 && !r.finding);
        }
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max W1 residual %.1e, min W0 residual %.1e", max_o1, min_o0);
    t.note = buf;
    return t;
  });

  criterion(12, "backend coherence", 120, [] {
    Tally t;
    SuiteConfig cfg;
    cfg.suite = "all";
    cfg.backend = "numeric";
    cfg.q = "1.4+0.3i";
    cfg.dims = {1, 2, 3, 4};
    cfg.draws = 3;
    cfg.seed = 12;
    double worst = 0;
    for (const auto& r : run_suite(cfg)) {
      if (r.finding) continue;  // W0 with k+ k- != 0 is not an exact-zero check
      worst = std::max(worst, r.residual.value_or(1.0));
      t.add(r, r.residual && *r.residual < 1e-9);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max residual %.1e", worst);
    t.note = buf;
    return t;
  });

  return failed_criteria == 0 ? 0 : 1;
}
