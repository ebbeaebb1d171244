#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "refl/verify/report.hpp"

namespace refl {

// Invalid configuration; the driver maps it to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unset optionals are sampled per draw from the seeded generator.
struct SuiteConfig {
  std::string suite = "all";
  std::vector<int> dims{2};
  std::string backend = "exact";
  std::string q;  // empty: "symbolic" (exact) or 1.4 (numeric)
  std::optional<double> x_exp, y_exp;
  std::optional<int> s0, s1;
  std::optional<std::string> eps_plus, eps_minus, k_plus, k_minus, p_tilde;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int draws = 2;
  std::string report = "json";
  std::string out;
  bool timing = false;
};

const std::vector<std::string>& suite_names();

// Set one key (flag name without dashes, e.g. "eps-plus") from its text value.
void apply_config_key(SuiteConfig& cfg, const std::string& key, const std::string& value);

// Flat "key = value" lines; '#' starts a comment. Errors carry the line number.
void apply_config_text(SuiteConfig& cfg, const std::string& text, const std::string& source = "config");

void validate(const SuiteConfig& cfg);

nlohmann::ordered_json config_json(const SuiteConfig& cfg);

// Runs every check selected by cfg.suite over dims x draws. Reports are
// sorted by name, then by serialized parameters.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

struct Summary {
  int passed = 0;
  int failed = 0;
  int findings = 0;
  int skipped = 0;
};

Summary summarize(const std::vector<CheckReport>& reports);

nlohmann::ordered_json report_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports);
std::string emit_report(const SuiteConfig& cfg, const std::vector<CheckReport>& reports);
std::string emit_text(const std::vector<CheckReport>& reports, bool with_timing);

// Parses a JSON document produced by emit_report back into reports.
std::vector<CheckReport> parse_report(const std::string& text);

}  // namespace refl
