#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qschur/bubbles.hpp"
#include "qschur/errors.hpp"
#include "qschur/parser.hpp"
#include "qschur/suites.hpp"
#include "qschur/tensorrep.hpp"

namespace {

int run_verify(const std::string& which, qschur::SuiteConfig cfg) {
  if (which != "all") {
    auto kind = qschur::suite_from_name(which);
    if (!kind) {
      std::cerr << "unknown suite: " << which << "\n";
      return 2;
    }
    cfg.suites = {*kind};
  }
  qschur::SuiteReport rep = qschur::run_suite(cfg);
  nlohmann::json j = qschur::to_json(rep);
  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path);
    out << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  long failed = 0;
  for (const auto& r : rep.results)
    if (!r.report.pass) {
      ++failed;
      std::cerr << "FAIL " << r.suite << " " << r.report.relation;
      if (r.report.witness)
        std::cerr << " witness " << r.report.witness->tuple << " residual "
                  << r.report.witness->residual;
      std::cerr << "\n";
    }
  std::cerr << (rep.pass ? "PASS" : "FAIL") << ": " << rep.results.size() - failed << "/"
            << rep.results.size() << " checks passed in " << rep.duration_ms << " ms\n";
  return rep.pass ? 0 : 1;
}

int run_compute(int n, int r, const std::string& expr, const std::vector<long>& tuple) {
  if ((int)tuple.size() != r) {
    std::cerr << "--vector must have exactly r entries\n";
    return 2;
  }
  qschur::Element e = qschur::parse_element(expr, n, r);
  int span = 1;
  for (const auto& [w, c] : e.terms()) span = std::max(span, qschur::word_span(w));
  long lo = *std::min_element(tuple.begin(), tuple.end()) - span - 1;
  long hi = *std::max_element(tuple.begin(), tuple.end()) + span + 1;
  qschur::RepConfig cfg{n, r, lo, hi};
  auto state = qschur::apply_element(cfg, e, qschur::basis_state(cfg, tuple));
  if (state.empty()) {
    std::cout << "0\n";
    return 0;
  }
  for (const auto& [idx, amp] : state)
    std::cout << "e_" << qschur::tuple_str(cfg.decode(idx)) << ": " << amp.str() << "\n";
  return 0;
}

int run_bubbles(int n, int i, const std::vector<int>& dots) {
  if ((int)dots.size() != n) {
    std::cerr << "--dots must have exactly n entries\n";
    return 2;
  }
  qschur::DigonState d{i, n, {}};
  for (int c = 1; c <= n; ++c) {
    if (dots[c - 1] < 0) {
      std::cerr << "dot counts must be nonnegative\n";
      return 2;
    }
    d.dots[c] = dots[c - 1];
  }
  std::cout << qschur::digon_closed_form_z(d).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the idempotented affine q-Schur algebras"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key-value config file mirroring the flags");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string which = "all";
  qschur::SuiteConfig cfg;
  std::string window_str;
  verify->add_option("suite", which, "Suite name or 'all'");
  verify->add_option("--n", cfg.n, "Rank n")->required();
  verify->add_option("--r", cfg.r, "Tensor degree r (default: n)");
  verify->add_option("--window", window_str, "Window override LO..HI");
  verify->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
  verify->add_flag("--serial", cfg.serial, "Use the serial reference path");
  verify->add_option("--out", cfg.output_path, "Write the JSON report here");
  verify->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  bool r_given = false;
  verify->callback([&] { r_given = verify->count("--r") > 0; });

  // compute
  auto* compute = app.add_subcommand("compute", "Apply an element to a basis vector");
  int cn = 0, cr = 0;
  std::string expr;
  std::vector<long> tuple;
  compute->add_option("--n", cn, "Rank n")->required();
  compute->add_option("--r", cr, "Tensor degree r")->required();
  compute->add_option("--element", expr, "Element expression")->required();
  compute->add_option("--vector", tuple, "Basis tuple t_1,...,t_r")->required()->delimiter(',');

  // bubbles reduce
  auto* bubbles = app.add_subcommand("bubbles", "Bubble calculus utilities");
  auto* reduce = bubbles->add_subcommand("reduce", "Reduce a dotted digon to bubbles");
  int bn = 0, bi = 0;
  std::vector<int> dots;
  reduce->add_option("--n", bn, "Rank n")->required();
  reduce->add_option("--i", bi, "Base color i")->required();
  reduce->add_option("--dots", dots, "Dot counts D_1,...,D_N")->required()->delimiter(',');
  bubbles->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      if (!r_given) cfg.r = cfg.n;
      if (!window_str.empty()) {
        auto dots_pos = window_str.find("..");
        if (dots_pos == std::string::npos) {
          std::cerr << "--window must look like LO..HI\n";
          return 2;
        }
        cfg.window = {std::stol(window_str.substr(0, dots_pos)),
                      std::stol(window_str.substr(dots_pos + 2))};
      }
      return run_verify(which, cfg);
    }
    if (*compute) return run_compute(cn, cr, expr, tuple);
    if (*reduce) return run_bubbles(bn, bi, dots);
  } catch (const qschur::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qschur::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
