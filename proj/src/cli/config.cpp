#include <cmath>
#include <iomanip>
#include <sstream>

#include "refl/cli/suite.hpp"
#include "refl/scalar/rational_parse.hpp"

namespace refl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_integer(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long r = 0;
  try {
    r = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ConfigError(key + ": expected an integer, got '" + v + "'");
  return r;
}

double parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double r = 0;
  try {
    r = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ConfigError(key + ": expected a number, got '" + v + "'");
  return r;
}

std::string checked_rational(const std::string& key, const std::string& v) {
  try {
    parse_rational(v);
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
  return v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",      "ybe",        "reflection", "intertwining",
                                              "coideal",  "appendix",   "symmetries", "onsager"};
  return names;
}

void apply_config_key(SuiteConfig& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "suite") {
    cfg.suite = v;
  } else if (key == "dims") {
    cfg.dims.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!trim(item).empty()) cfg.dims.push_back(static_cast<int>(parse_integer(key, trim(item))));
  } else if (key == "backend") {
    cfg.backend = v;
  } else if (key == "q") {
    cfg.q = v;
  } else if (key == "x-exp") {
    cfg.x_exp = parse_real(key, v);
  } else if (key == "y-exp") {
    cfg.y_exp = parse_real(key, v);
  } else if (key == "s0") {
    cfg.s0 = static_cast<int>(parse_integer(key, v));
  } else if (key == "s1") {
    cfg.s1 = static_cast<int>(parse_integer(key, v));
  } else if (key == "eps-plus") {
    cfg.eps_plus = checked_rational(key, v);
  } else if (key == "eps-minus") {
    cfg.eps_minus = checked_rational(key, v);
  } else if (key == "k-plus") {
    cfg.k_plus = checked_rational(key, v);
  } else if (key == "k-minus") {
    cfg.k_minus = checked_rational(key, v);
  } else if (key == "p-tilde") {
    cfg.p_tilde = checked_rational(key, v);
  } else if (key == "seed") {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw ConfigError("seed: expected an unsigned integer, got '" + v + "'");
    }
  } else if (key == "tol") {
    cfg.tol = parse_real(key, v);
  } else if (key == "draws") {
    cfg.draws = static_cast<int>(parse_integer(key, v));
  } else if (key == "report") {
    cfg.report = v;
  } else if (key == "out") {
    cfg.out = v;
  } else if (key == "timing") {
    if (v == "true" || v == "1") cfg.timing = true;
    else if (v == "false" || v == "0") cfg.timing = false;
    else throw ConfigError("timing: expected true or false, got '" + v + "'");
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

void apply_config_text(SuiteConfig& cfg, const std::string& text, const std::string& source) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value', got '" + line + "'");
    try {
      apply_config_key(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
}

void validate(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw ConfigError("suite: unknown suite '" + cfg.suite + "'");
  if (cfg.dims.empty()) throw ConfigError("dims: list must be nonempty");
  for (int n : cfg.dims)
    if (n < 1) throw ConfigError("dims: dimensions must be positive, got " + std::to_string(n));
  if (cfg.backend != "exact" && cfg.backend != "numeric")
    throw ConfigError("backend: expected exact or numeric, got '" + cfg.backend + "'");
  if (cfg.backend == "exact") {
    if (!cfg.q.empty() && cfg.q != "symbolic")
      throw ConfigError("q: the exact backend works over Q(q^{1/2}) and requires q = symbolic");
    for (const auto& [name, e] : {std::pair{"x-exp", cfg.x_exp}, std::pair{"y-exp", cfg.y_exp}})
      if (e && std::floor(*e) != *e)
        throw ConfigError(std::string(name) + ": symbolic q requires an integer spectral exponent");
  } else {
    if (cfg.q == "symbolic") throw ConfigError("q: the numeric backend needs a numeric q");
    if (!cfg.q.empty()) {
      std::complex<double> q;
      try {
        q = parse_complex(cfg.q);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("q: ") + e.what());
      }
      if (!(std::abs(q) > 1.0)) throw ConfigError("q: numeric backend requires |q| > 1");
    }
  }
  if (cfg.eps_plus && parse_rational(*cfg.eps_plus) == 0) throw ConfigError("eps_plus must be nonzero");
  if (cfg.eps_minus && parse_rational(*cfg.eps_minus) == 0) throw ConfigError("eps_minus must be nonzero");
  if (!(cfg.tol > 0.0)) throw ConfigError("tol: must be positive");
  if (cfg.draws < 1) throw ConfigError("draws: must be at least 1");
  if (cfg.report != "json" && cfg.report != "text")
    throw ConfigError("report: expected json or text, got '" + cfg.report + "'");
}

nlohmann::ordered_json config_json(const SuiteConfig& cfg) {
  nlohmann::ordered_json j;
  j["suite"] = cfg.suite;
  j["dims"] = cfg.dims;
  j["backend"] = cfg.backend;
  j["q"] = cfg.q.empty() ? (cfg.backend == "exact" ? "symbolic" : "1.4") : cfg.q;
  auto opt = [&](const char* k, const auto& v) {
    if (v) j[k] = *v;
    else j[k] = "sampled";
  };
  opt("x-exp", cfg.x_exp);
  opt("y-exp", cfg.y_exp);
  opt("s0", cfg.s0);
  opt("s1", cfg.s1);
  opt("eps-plus", cfg.eps_plus);
  opt("eps-minus", cfg.eps_minus);
  opt("k-plus", cfg.k_plus);
  opt("k-minus", cfg.k_minus);
  opt("p-tilde", cfg.p_tilde);
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["draws"] = cfg.draws;
  return j;
}

Summary summarize(const std::vector<CheckReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    if (!r.passed) ++s.failed;
    else if (r.finding) ++s.findings;
    else if (r.skipped) ++s.skipped;
    else ++s.passed;
  }
  return s;
}

nlohmann::ordered_json report_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json j;
  j["suite"] = cfg.suite;
  j["config"] = config_json(cfg);
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) j["checks"].push_back(to_json(r, cfg.timing));
  const Summary s = summarize(reports);
  j["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"findings", s.findings}, {"skipped", s.skipped}};
  return j;
}

std::string emit_text(const std::vector<CheckReport>& reports, bool with_timing) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(8) << "status" << "  "
     << std::setw(12) << "result";
  if (with_timing) os << "  " << std::setw(10) << "ms";
  os << "  params\n";
  for (const auto& r : reports) {
    const std::string status = !r.passed ? "FAIL" : r.finding ? "FINDING" : r.skipped ? "SKIP" : "ok";
    std::ostringstream res;
    if (r.exact_zero) res << (*r.exact_zero ? "zero" : "nonzero");
    else if (r.residual) res << std::scientific << std::setprecision(3) << *r.residual;
    else res << "-";
    os << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(8) << status << "  " << std::setw(12)
       << res.str();
    if (with_timing) os << "  " << std::setw(10) << std::fixed << std::setprecision(2) << r.elapsed_ms;
    os << "  " << r.params.dump();
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  const Summary s = summarize(reports);
  os << "\npassed " << s.passed << ", failed " << s.failed << ", findings " << s.findings << ", skipped " << s.skipped
     << "\n";
  return os.str();
}

std::string emit_report(const SuiteConfig& cfg, const std::vector<CheckReport>& reports) {
  if (cfg.report == "text") return emit_text(reports, cfg.timing);
  return report_json(cfg, reports).dump(2) + "\n";
}

std::vector<CheckReport> parse_report(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  std::vector<CheckReport> out;
  for (const auto& c : j.at("checks")) out.push_back(report_from_json(c));
  return out;
}

}  // namespace refl
