#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "refl/cli/suite.hpp"
#include "refl/scalar/rational_parse.hpp"
#include "refl/verify/checks.hpp"

namespace refl {

namespace {

// One parameter draw. Both backends consume the generator identically.
struct Draw {
  int index = 0;
  RationalParams p;
  int mx = 0, my = 0, mz = 0;
  Complex x, y, z;  // numeric spectral values when no exponent is fixed
  mpq_class a;
  HalfInt b, c;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  mpq_class rational() {
    mpq_class r(uniform(1, 20), uniform(1, 20));
    r.canonicalize();
    return uniform(0, 1) ? r : mpq_class(-r);
  }

  Complex spectral() {
    const double mod = std::uniform_real_distribution<double>(0.6, 1.6)(rng_);
    const double arg = std::uniform_real_distribution<double>(-std::numbers::pi, std::numbers::pi)(rng_);
    return std::polar(mod, arg);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Draw> sample_draws(const SuiteConfig& cfg) {
  Sampler s(cfg.seed);
  std::vector<Draw> draws;
  for (int i = 0; i < cfg.draws; ++i) {
    Draw d;
    d.index = i;
    // Rejecting |eps+| = |eps-| keeps -eps-/eps+ away from the integral powers of q
    // at which the infinite products of K0 and kappa acquire a zero denominator.
    do {
      d.p.eps_plus = s.rational();
      d.p.eps_minus = s.rational();
    } while (abs(d.p.eps_plus) == abs(d.p.eps_minus));
    d.p.k_plus = s.rational();
    d.p.k_minus = s.rational();
    d.p.p_tilde = s.rational();
    d.p.s0 = s.uniform(-1, 2);
    d.p.s1 = s.uniform(-1, 2);
    d.mx = s.uniform(-2, 3);
    d.my = s.uniform(-2, 3);
    d.mz = s.uniform(-2, 3);
    d.x = s.spectral();
    d.y = s.spectral();
    d.z = s.spectral();
    d.a = s.rational();
    d.b = HalfInt{s.uniform(-3, 3)};
    d.c = HalfInt{s.uniform(-3, 3)};

    if (cfg.eps_plus) d.p.eps_plus = parse_rational(*cfg.eps_plus);
    if (cfg.eps_minus) d.p.eps_minus = parse_rational(*cfg.eps_minus);
    if (cfg.k_plus) d.p.k_plus = parse_rational(*cfg.k_plus);
    if (cfg.k_minus) d.p.k_minus = parse_rational(*cfg.k_minus);
    if (cfg.p_tilde) d.p.p_tilde = parse_rational(*cfg.p_tilde);
    if (cfg.s0) d.p.s0 = *cfg.s0;
    if (cfg.s1) d.p.s1 = *cfg.s1;
    draws.push_back(d);
  }
  return draws;
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// Spectral parameters for a draw in a given backend, plus their report labels.
template <class Field>
struct SpectralSet {
  Spectral<typename Field::Scalar> x, y, z;
  std::string xs, ys, zs;
};

SpectralSet<ExactField> spectral_set(const ExactField& f, const SuiteConfig& cfg, const Draw& d) {
  const int mx = cfg.x_exp ? static_cast<int>(*cfg.x_exp) : d.mx;
  const int my = cfg.y_exp ? static_cast<int>(*cfg.y_exp) : d.my;
  using Sp = Spectral<RationalFunction>;
  return {Sp::from_q_exponent(f, mx), Sp::from_q_exponent(f, my), Sp::from_q_exponent(f, d.mz),
          "q^" + std::to_string(mx), "q^" + std::to_string(my), "q^" + std::to_string(d.mz)};
}

SpectralSet<NumericField> spectral_set(const NumericField& f, const SuiteConfig& cfg, const Draw& d) {
  auto value = [&](const std::optional<double>& e, Complex sampled) {
    return e ? std::exp(*e * std::log(f.q())) : sampled;
  };
  const Complex x = value(cfg.x_exp, d.x), y = value(cfg.y_exp, d.y);
  using Sp = Spectral<Complex>;
  return {Sp::from_value(x), Sp::from_value(y), Sp::from_value(d.z), complex_text(x), complex_text(y),
          complex_text(d.z)};
}

nlohmann::ordered_json params_json(int n, const Draw& d, const RationalParams& p, const std::string& x) {
  nlohmann::ordered_json j;
  if (n > 0) j["n"] = n;
  j["draw"] = d.index;
  j["s0"] = p.s0;
  j["s1"] = p.s1;
  j["x"] = x;
  j["eps_plus"] = p.eps_plus.get_str();
  j["eps_minus"] = p.eps_minus.get_str();
  j["k_plus"] = p.k_plus.get_str();
  j["k_minus"] = p.k_minus.get_str();
  j["p_tilde"] = p.p_tilde.get_str();
  return j;
}

bool selected(const SuiteConfig& cfg, const char* suite) { return cfg.suite == "all" || cfg.suite == suite; }

template <class Field>
class Runner {
 public:
  using S = typename Field::Scalar;

  Runner(const Field& f, const SuiteConfig& cfg) : f_(f), cfg_(cfg) {}

  std::vector<CheckReport> run() {
    for (const Draw& d : sample_draws(cfg_)) run_draw(d);
    std::sort(out_.begin(), out_.end(), [](const CheckReport& a, const CheckReport& b) {
      if (a.name != b.name) return a.name < b.name;
      return a.params.dump() < b.params.dump();
    });
    return std::move(out_);
  }

 private:
  // Runs fn, stamps params and the per-report share of elapsed time, and turns
  // pole or convergence errors into failed reports.
  void record(const std::string& fallback_name, const nlohmann::ordered_json& params,
              const std::function<std::vector<CheckReport>(const CheckContext&)>& fn) {
    const CheckContext ctx{params, cfg_.tol};
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckReport> rs;
    try {
      rs = fn(ctx);
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception& e) {
      CheckReport r;
      r.name = fallback_name;
      r.params = params;
      r.detail = std::string("error: ") + e.what();
      rs.push_back(r);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& r : rs) {
      r.elapsed_ms = ms / static_cast<double>(rs.size());
      out_.push_back(std::move(r));
    }
  }

  void one(const std::string& name, const nlohmann::ordered_json& params,
           const std::function<CheckReport(const CheckContext&)>& fn) {
    record(name, params, [&](const CheckContext& ctx) { return std::vector<CheckReport>{fn(ctx)}; });
  }

  void run_draw(const Draw& d) {
    const auto sp = spectral_set(f_, cfg_, d);
    const auto& x = sp.x;
    const auto& y = sp.y;
    const auto& z = sp.z;
    const auto p = to_field(f_, d.p);
    const auto base = params_json(0, d, d.p, sp.xs);
    auto with_y = [&](nlohmann::ordered_json j) {
      j["y"] = sp.ys;
      return j;
    };
    const Variant variants[] = {Variant::diagonal, Variant::upper, Variant::lower, Variant::upper_alt,
                                Variant::lower_alt};

    // Dimension-free checks.
    if (selected(cfg_, "symmetries"))
      record("lops.R_reduction", base, [&](const CheckContext& c) { return check_R_reduction(f_, p, x, c); });
    if (selected(cfg_, "ybe")) {
      auto j = with_y(base);
      j["z"] = sp.zs;
      for (YbeKind k : {YbeKind::RRR, YbeKind::RbRbRb}) {
        const auto rep2 = make_irrep(f_, 2);
        one("ybe." + to_string(k), j, [&](const CheckContext& c) { return check_ybe(f_, k, rep2, p, x, y, z, c); });
      }
    }
    if (selected(cfg_, "reflection")) {
      const auto j = with_y(base);
      one("reflection.matrix", j, [&](const CheckContext& c) { return check_reflection_matrix(f_, p, x, y, c); });
      for (Variant v : variants)
        one("reflection.oracle_n2." + to_string(v), j,
            [&](const CheckContext& c) { return check_reflection_oracle(f_, v, p, x, y, c); });
      record("kops.fundamental", base, [&](const CheckContext& c) { return check_fundamental_K(f_, p, x, c); });
    }

    for (int n : cfg_.dims) {
      const auto rep = make_irrep(f_, n);
      const auto pj = params_json(n, d, d.p, sp.xs);
      if (selected(cfg_, "symmetries")) {
        record("repr", pj, [&](const CheckContext& c) { return check_representation(f_, rep, p, x, c); });
        record("sym", pj, [&](const CheckContext& c) { return check_symmetries(f_, rep, p, x, c); });
      }
      if (selected(cfg_, "ybe")) {
        auto j = with_y(pj);
        j["z"] = sp.zs;
        for (YbeKind k : {YbeKind::LLR, YbeKind::LbLbRb})
          one("ybe." + to_string(k), j, [&](const CheckContext& c) { return check_ybe(f_, k, rep, p, x, y, z, c); });
      }
      if (selected(cfg_, "reflection"))
        for (Variant v : variants)
          one("reflection.operator." + to_string(v), with_y(pj),
              [&](const CheckContext& c) { return check_reflection_operator(f_, v, rep, p, x, y, c); });
      if (selected(cfg_, "intertwining")) {
        for (Variant v : variants)
          record("intertwining." + to_string(v), pj,
                 [&](const CheckContext& c) { return check_intertwining(f_, v, rep, p, x, c); });
        record("aux", pj, [&](const CheckContext& c) { return check_aux_lemmas(f_, rep, p, x, c); });
        record("kops.form", pj, [&](const CheckContext& c) { return check_k_forms(f_, rep, p, x, c); });
      }
      if (selected(cfg_, "coideal")) {
        record("coideal", pj, [&](const CheckContext& c) { return check_coideal_algebras(f_, rep, p, x, c); });
        for (int m : cfg_.dims) {
          const auto rep2 = make_irrep(f_, m);
          auto j = with_y(pj);
          j["m"] = m;
          record("coproduct", j,
                 [&](const CheckContext& c) { return check_coideal_coproduct(f_, rep, rep2, p, x, y, c); });
        }
      }
      if (selected(cfg_, "onsager")) {
        // Generic k+ k- plus the two triangular degenerations.
        for (int which = 0; which < 3; ++which) {
          RationalParams rp = d.p;
          if (which == 1) rp.k_minus = 0;
          if (which == 2) rp.k_plus = 0;
          const auto fp = to_field(f_, rp);
          record("onsager", params_json(n, d, rp, sp.xs),
                 [&](const CheckContext& c) { return check_onsager_candidate(f_, rep, fp, x, c); });
        }
      }
      if (selected(cfg_, "appendix")) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["draw"] = d.index;
        j["a"] = d.a.get_str();
        j["b"] = d.b.to_string();
        j["c"] = d.c.to_string();
        const S a = f_.from_rational(d.a);
        for (int id = 1; id <= 13; ++id)
          one("appendix." + std::to_string(id), j,
              [&](const CheckContext& c) { return check_appendix(f_, id, rep, a, d.b, d.c, c); });
      }
    }
  }

  const Field& f_;
  const SuiteConfig& cfg_;
  std::vector<CheckReport> out_;
};

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  for (const auto& d : sample_draws(cfg)) {
    try {
      validate(d.p);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (cfg.backend == "exact") return Runner<ExactField>(ExactField{}, cfg).run();
  const NumericField f(cfg.q.empty() ? Complex(1.4, 0.0) : parse_complex(cfg.q));
  return Runner<NumericField>(f, cfg).run();
}

}  // namespace refl
