#include "doctest.h"
#include "refl/cli/suite.hpp"

using namespace refl;

namespace {
SuiteConfig small(const std::string& suite, const std::string& backend = "exact") {
  SuiteConfig c;
  c.suite = suite;
  c.backend = backend;
  c.dims = {2};
  c.draws = 2;
  c.seed = 7;
  return c;
}
}  // namespace

TEST_CASE("ybe suite with defaults passes") {
  const auto reports = run_suite(small("ybe"));
  const auto s = summarize(reports);
  CHECK(s.failed == 0);
  CHECK(s.passed == static_cast<int>(reports.size()));
  CHECK(!reports.empty());
}

TEST_CASE("config errors") {
  auto c = small("reflection");
  c.eps_plus = "0";
  CHECK_THROWS_WITH_AS(run_suite(c), "eps_plus must be nonzero", ConfigError);
  c = small("ybe");
  c.dims.clear();
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small("ybe");
  c.x_exp = 0.5;
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("integer spectral exponent"), ConfigError);
  c = small("bogus");
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small("ybe", "numeric");
  c.q = "0.5";
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("config text: keys, comments, line diagnostics") {
  SuiteConfig c;
  apply_config_text(c, "# sweep\nsuite = appendix\ndims = 2, 3\nseed=11  # trailing\neps-plus = 3/4\n");
  CHECK(c.suite == "appendix");
  CHECK(c.dims == std::vector<int>{2, 3});
  CHECK(c.seed == 11);
  CHECK(*c.eps_plus == "3/4");
  CHECK_THROWS_WITH(apply_config_text(c, "suite = ybe\ndims = two\n", "f.cfg"), doctest::Contains("f.cfg:2:"));
  CHECK_THROWS_WITH(apply_config_text(c, "nonsense\n"), doctest::Contains("expected 'key = value'"));
  CHECK_THROWS_WITH(apply_config_text(c, "colour = red\n"), doctest::Contains("unknown key"));
}

TEST_CASE("empty report has zero counts") {
  const auto j = report_json(small("ybe"), {});
  CHECK(j["summary"]["passed"] == 0);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["summary"]["findings"] == 0);
  CHECK(j["checks"].empty());
}

TEST_CASE("reports are deterministic and round-trip bit-exactly") {
  for (const char* backend : {"exact", "numeric"}) {
    auto c = small("all", backend);
    c.draws = 1;
    const auto a = run_suite(c), b = run_suite(c);
    const std::string doc = emit_report(c, a);
    CHECK(doc == emit_report(c, b));
    const auto back = parse_report(doc);
    REQUIRE(back.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(back[i].name == a[i].name);
      CHECK(back[i].params == a[i].params);
      CHECK(back[i].exact_zero == a[i].exact_zero);
      CHECK(back[i].passed == a[i].passed);
      CHECK(back[i].finding == a[i].finding);
      CHECK(back[i].skipped == a[i].skipped);
      if (a[i].residual) CHECK(*back[i].residual == *a[i].residual);  // bitwise equality of doubles
    }
    CHECK(std::is_sorted(a.begin(), a.end(), [](const CheckReport& x, const CheckReport& y) {
      return x.name != y.name ? x.name < y.name : x.params.dump() < y.params.dump();
    }));
  }
}

TEST_CASE("a nonzero W0 residual is a finding, not a failure") {
  auto c = small("onsager", "numeric");
  c.q = "1.4";
  c.k_plus = "1/2";
  c.k_minus = "-2/3";
  const auto reports = run_suite(c);
  const auto s = summarize(reports);
  CHECK(s.failed == 0);
  CHECK(s.findings == 2);
  const auto j = report_json(c, reports);
  CHECK(j["summary"]["findings"] == 2);
}

TEST_CASE("failed checks are counted") {
  CheckReport bad{"x", nlohmann::ordered_json::object()};
  bad.residual = 0.25;
  CheckReport good{"y", nlohmann::ordered_json::object()};
  good.residual = 0.0;
  good.passed = true;
  const auto j = report_json(small("ybe"), {bad, good});
  CHECK(j["summary"]["failed"] == 1);
  CHECK(j["checks"][0]["residual"] == 0.25);
  CHECK(emit_text({bad, good}, false).find("FAIL") != std::string::npos);
}
