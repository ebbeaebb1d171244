#include "refl/verify/report.hpp"

#include <algorithm>
#include <sstream>

namespace refl {

namespace {

std::string locate(std::size_t n, std::size_t k) {
  return "(" + std::to_string(k / n) + "," + std::to_string(k % n) + ")";
}

template <class S>
void check_sizes(const std::vector<Matrix<S>>& terms) {
  for (const auto& t : terms)
    if (t.size() != terms.front().size()) throw std::invalid_argument("sum_residual: size mismatch");
}

}  // namespace

CheckReport sum_residual(const std::string& name, const CheckContext& ctx,
                         const std::vector<Matrix<RationalFunction>>& terms) {
  CheckReport r{name, ctx.params};
  r.exact_zero = true;
  if (terms.empty()) {
    r.passed = true;
    return r;
  }
  check_sizes(terms);
  const std::size_t n = terms.front().size();
  for (std::size_t k = 0; k < n * n; ++k) {
    RationalFunction s;
    for (const auto& t : terms) s += t.entries()[k];
    if (!s.is_zero()) {
      r.exact_zero = false;
      std::string text = s.to_string();
      if (text.size() > 160) text = text.substr(0, 157) + "...";
      r.detail = "first nonzero entry " + locate(n, k) + " = " + text;
      break;
    }
  }
  r.passed = *r.exact_zero;
  return r;
}

CheckReport sum_residual(const std::string& name, const CheckContext& ctx, const std::vector<Matrix<Complex>>& terms) {
  CheckReport r{name, ctx.params};
  r.residual = 0.0;
  if (terms.empty()) {
    r.passed = true;
    return r;
  }
  check_sizes(terms);
  const std::size_t n = terms.front().size();
  double scale = 0.0, worst = 0.0;
  std::size_t worst_k = 0;
  for (std::size_t k = 0; k < n * n; ++k) {
    Complex s = 0.0;
    for (const auto& t : terms) {
      s += t.entries()[k];
      scale = std::max(scale, std::abs(t.entries()[k]));
    }
    if (std::abs(s) > worst) {
      worst = std::abs(s);
      worst_k = k;
    }
  }
  r.residual = scale > 0.0 ? worst / scale : 0.0;
  if (worst > 0.0) r.detail = "worst entry " + locate(n, worst_k);
  r.passed = *r.residual < ctx.tol;
  return r;
}

CheckReport skipped_report(const std::string& name, const CheckContext& ctx, const std::string& why) {
  CheckReport r{name, ctx.params};
  r.skipped = true;
  r.passed = true;
  r.detail = why;
  return r;
}

nlohmann::ordered_json to_json(const CheckReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["params"] = r.params;
  if (r.exact_zero) j["exact_zero"] = *r.exact_zero;
  if (r.residual) j["residual"] = *r.residual;
  j["passed"] = r.passed;
  if (r.finding) j["finding"] = true;
  if (r.skipped) j["skipped"] = true;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

CheckReport report_from_json(const nlohmann::ordered_json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.params = j.at("params");
  if (j.contains("exact_zero")) r.exact_zero = j["exact_zero"].get<bool>();
  if (j.contains("residual")) r.residual = j["residual"].get<double>();
  r.passed = j.at("passed").get<bool>();
  r.finding = j.value("finding", false);
  r.skipped = j.value("skipped", false);
  r.detail = j.value("detail", std::string());
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

}  // namespace refl
