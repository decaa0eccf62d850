// Compares the serial reference path with the OpenMP-parallel path on the
// presentation suite and checks that both produce identical reports.
#include <chrono>
#include <iostream>

#include "qschur/suites.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_ms(qschur::SuiteConfig cfg, qschur::SuiteReport& out) {
  auto t0 = Clock::now();
  out = qschur::run_suite(cfg);
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool same_reports(const qschur::SuiteReport& a, const qschur::SuiteReport& b) {
  if (a.results.size() != b.results.size()) return false;
  for (size_t k = 0; k < a.results.size(); ++k) {
    const auto& x = a.results[k].report;
    const auto& y = b.results[k].report;
    if (x.relation != y.relation || x.pass != y.pass || x.vectors_checked != y.vectors_checked)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 3;
  qschur::SuiteConfig cfg;
  cfg.n = n;
  cfg.r = n;
  cfg.suites = {qschur::SuiteKind::Presentation};

  qschur::SuiteReport serial, parallel;
  cfg.serial = true;
  double t_serial = run_ms(cfg, serial);
  cfg.serial = false;
  double t_parallel = run_ms(cfg, parallel);

  std::cout << "presentation suite, n = r = " << n << " (" << serial.results.size()
            << " relations)\n";
  std::cout << "  serial reference: " << t_serial << " ms\n";
  std::cout << "  OpenMP parallel:  " << t_parallel << " ms\n";
  std::cout << "  speedup:          " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";

  if (!same_reports(serial, parallel)) {
    std::cout << "MISMATCH: serial and parallel reports differ\n";
    return 1;
  }
  if (!serial.pass || !parallel.pass) {
    std::cout << "FAIL: suite did not pass\n";
    return 1;
  }
  std::cout << "reports identical, all relations pass\n";
  return 0;
}
