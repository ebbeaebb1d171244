#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "refl/cli/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Residual checks for reflection equations over U_q(sl2) evaluation modules"};
  app.option_defaults()->always_capture_default();

  std::string config_path;
  std::vector<std::pair<std::string, std::string>> flags;
  app.add_option("--config", config_path, "flat key = value file; command-line flags override it");

  // Every key of the config file has a flag of the same name.
  const char* keys[] = {"suite", "dims",     "backend",   "q",      "x-exp",   "y-exp", "s0",   "s1",     "eps-plus",
                        "eps-minus", "k-plus", "k-minus", "p-tilde", "seed", "tol", "draws", "report", "out"};
  std::map<std::string, std::string> values;
  for (const char* k : keys) app.add_option(std::string("--") + k, values[k]);
  bool timing = false;
  app.add_flag("--timing", timing, "include elapsed_ms in reports (breaks byte-identical output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  refl::SuiteConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw refl::ConfigError("cannot read config file " + config_path);
      std::stringstream ss;
      ss << in.rdbuf();
      refl::apply_config_text(cfg, ss.str(), config_path);
    }
    for (const char* k : keys)
      if (app.get_option(std::string("--") + k)->count() > 0) refl::apply_config_key(cfg, k, values[k]);
    if (timing) cfg.timing = true;
    refl::validate(cfg);
  } catch (const refl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  std::vector<refl::CheckReport> reports;
  try {
    reports = refl::run_suite(cfg);
  } catch (const refl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const std::string doc = refl::emit_report(cfg, reports);
  if (cfg.out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    out << doc;
  }
  const auto s = refl::summarize(reports);
  std::cerr << "passed " << s.passed << ", failed " << s.failed << ", findings " << s.findings << ", skipped "
            << s.skipped << "\n";
  return s.failed == 0 ? 0 : 1;
}
