#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qschur/verify.hpp"

namespace qschur {

enum class SuiteKind {
  Presentation,
  Delta,
  RCorollary,
  RExpansion,
  Iota,
  DividedPowers,
  Bubbles,
};

const char* suite_name(SuiteKind k);
std::optional<SuiteKind> suite_from_name(const std::string& name);

struct SuiteConfig {
  int n = 3;
  int r = 3;
  std::optional<std::pair<long, long>> window;  // override of the auto window
  std::vector<SuiteKind> suites;                // empty = all applicable
  int jobs = 0;                                 // 0 = library default
  bool serial = false;                          // serial reference path
  std::string output_path;
  unsigned seed = 20240901;
};

struct SuiteResult {
  std::string suite;
  VerifyReport report;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<SuiteResult> results;
  bool pass = true;
  long duration_ms = 0;
};

// Runs the selected suites; throws ConfigError for invalid configs (r > n,
// delta-family suites with r != n, unknown suite). Failures inside a suite
// are reported, never thrown.
SuiteReport run_suite(const SuiteConfig& cfg);

// Deliberately broken runs: a relation with one coefficient scaled by q, and
// the bubble conversion with the flipped sign convention. Each entry passes
// iff the corruption was detected (a failing report with a witness).
std::vector<SuiteResult> negative_control_results(int n);

nlohmann::json to_json(const SuiteReport& rep);

}  // namespace qschur
