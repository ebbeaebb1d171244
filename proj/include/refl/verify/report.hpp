#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "refl/matrix.hpp"

namespace refl {

// Outcome of one verification. Exact checks set exact_zero, numeric checks set residual.
struct CheckReport {
  std::string name;
  nlohmann::ordered_json params;
  std::optional<bool> exact_zero;
  std::optional<double> residual;
  std::string detail;
  bool passed = false;
  bool finding = false;  // reported observation, never a failure
  bool skipped = false;
  double elapsed_ms = 0.0;
};

struct CheckContext {
  nlohmann::ordered_json params;
  double tol = 1e-9;  // numeric pass threshold on the relative residual
};

// Residual of sum(terms) = 0. Numeric residuals are normalized by the largest
// entry of any single term.
CheckReport sum_residual(const std::string& name, const CheckContext& ctx,
                         const std::vector<Matrix<RationalFunction>>& terms);
CheckReport sum_residual(const std::string& name, const CheckContext& ctx, const std::vector<Matrix<Complex>>& terms);

template <class S>
CheckReport equality_residual(const std::string& name, const CheckContext& ctx, const Matrix<S>& lhs,
                              const Matrix<S>& rhs) {
  return sum_residual(name, ctx, std::vector<Matrix<S>>{lhs, -rhs});
}

template <class S>
Matrix<S> scalar_matrix(const S& s) {
  Matrix<S> m(1);
  m(0, 0) = s;
  return m;
}

CheckReport skipped_report(const std::string& name, const CheckContext& ctx, const std::string& why);

nlohmann::ordered_json to_json(const CheckReport& r, bool with_timing);
CheckReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace refl
