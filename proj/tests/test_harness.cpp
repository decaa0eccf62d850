#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "qschur/errors.hpp"
#include "qschur/suites.hpp"

using namespace qschur;

TEST_CASE("suite names round trip") {
  for (SuiteKind k : {SuiteKind::Presentation, SuiteKind::Delta, SuiteKind::RCorollary,
                      SuiteKind::RExpansion, SuiteKind::Iota, SuiteKind::DividedPowers,
                      SuiteKind::Bubbles}) {
    auto back = suite_from_name(suite_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(!suite_from_name("nope").has_value());
}

TEST_CASE("config validation") {
  SuiteConfig bad;
  bad.n = 3;
  bad.r = 4;
  CHECK_THROWS_AS(run_suite(bad), ConfigError);

  SuiteConfig square_only;
  square_only.n = 3;
  square_only.r = 2;
  square_only.suites = {SuiteKind::Delta};
  CHECK_THROWS_AS(run_suite(square_only), ConfigError);
}

TEST_CASE("presentation suite passes in the n > r regime") {
  SuiteConfig cfg;
  cfg.n = 3;
  cfg.r = 2;
  cfg.suites = {SuiteKind::Presentation};
  SuiteReport rep = run_suite(cfg);
  CHECK(rep.pass);
  CHECK(!rep.results.empty());
}

TEST_CASE("serial and parallel runs produce identical reports") {
  SuiteConfig cfg;
  cfg.n = 3;
  cfg.r = 3;
  cfg.suites = {SuiteKind::Presentation, SuiteKind::Delta};

  cfg.serial = true;
  SuiteReport a = run_suite(cfg);
  cfg.serial = false;
  SuiteReport b = run_suite(cfg);

  REQUIRE(a.results.size() == b.results.size());
  for (size_t k = 0; k < a.results.size(); ++k) {
    CHECK(a.results[k].suite == b.results[k].suite);
    CHECK(a.results[k].report.relation == b.results[k].report.relation);
    CHECK(a.results[k].report.pass == b.results[k].report.pass);
    CHECK(a.results[k].report.vectors_checked == b.results[k].report.vectors_checked);
  }
  CHECK(a.pass);
  CHECK(b.pass);
}

TEST_CASE("window override is honored") {
  SuiteConfig cfg;
  cfg.n = 3;
  cfg.r = 3;
  cfg.suites = {SuiteKind::Presentation};
  cfg.window = {{-10L, 13L}};
  SuiteReport rep = run_suite(cfg);
  CHECK(rep.pass);
}

TEST_CASE("negative controls detect both corruptions") {
  auto results = negative_control_results(3);
  REQUIRE(results.size() == 2);
  for (const auto& r : results) {
    CHECK(r.report.pass);
    REQUIRE(r.report.witness.has_value());
    CHECK(r.report.witness->residual.rfind("detected:", 0) == 0);
  }
}

TEST_CASE("json report schema") {
  SuiteConfig cfg;
  cfg.n = 3;
  cfg.r = 3;
  cfg.suites = {SuiteKind::Bubbles};
  SuiteReport rep = run_suite(cfg);
  nlohmann::json j = to_json(rep);
  CHECK(j.contains("config"));
  CHECK(j["config"]["n"] == 3);
  CHECK(j.contains("conventions"));
  CHECK(j["conventions"].contains("bubble_scalars"));
  CHECK(j.contains("reports"));
  REQUIRE(!j["reports"].empty());
  for (const auto& e : j["reports"]) {
    CHECK(e.contains("suite"));
    CHECK(e.contains("relation"));
    CHECK(e.contains("status"));
    CHECK(e.contains("vectors"));
  }
  CHECK(j["summary"]["overall"] == "pass");
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("full n=3 run passes end to end") {
  SuiteConfig cfg;
  cfg.n = 3;
  cfg.r = 3;  // all suites apply at r = n
  SuiteReport rep = run_suite(cfg);
  CHECK(rep.pass);
  // every declared suite actually contributed reports
  std::set<std::string> seen;
  for (const auto& r : rep.results) seen.insert(r.suite);
  for (const char* s : {"presentation", "delta", "r_corollary", "r_expansion", "iota",
                        "divided_powers", "bubbles"})
    CHECK(seen.count(s) == 1);
}
