#include "qschur/suites.hpp"

#include <chrono>
#include <random>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qschur/bubbles.hpp"
#include "qschur/errors.hpp"
#include "qschur/iota.hpp"
#include "qschur/qcombinat.hpp"

namespace qschur {

const char* suite_name(SuiteKind k) {
  switch (k) {
    case SuiteKind::Presentation: return "presentation";
    case SuiteKind::Delta: return "delta";
    case SuiteKind::RCorollary: return "r_corollary";
    case SuiteKind::RExpansion: return "r_expansion";
    case SuiteKind::Iota: return "iota";
    case SuiteKind::DividedPowers: return "divided_powers";
    case SuiteKind::Bubbles: return "bubbles";
  }
  return "?";
}

std::optional<SuiteKind> suite_from_name(const std::string& name) {
  for (SuiteKind k : {SuiteKind::Presentation, SuiteKind::Delta, SuiteKind::RCorollary,
                      SuiteKind::RExpansion, SuiteKind::Iota, SuiteKind::DividedPowers,
                      SuiteKind::Bubbles})
    if (name == suite_name(k)) return k;
  return std::nullopt;
}

namespace {

// Each relation gets its own auto-sized window (so the safe interior stays
// small no matter how long other relations in the batch are) unless the
// config pins an explicit window for the whole run.
std::vector<VerifyReport> run_relations(const std::vector<RelationPair>& rels,
                                        const SuiteConfig& cfg, int n, int r) {
  std::vector<VerifyReport> out(rels.size());
#ifdef _OPENMP
  int threads = cfg.serial ? 1 : (cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long k = 0; k < (long)rels.size(); ++k) {
    try {
      RepConfig w = cfg.window ? RepConfig{n, r, cfg.window->first, cfg.window->second}
                               : auto_window(n, r, {rels[k]});
      out[k] = verify_pair(rels[k], w);
    } catch (const std::exception& e) {
      out[k].relation = rels[k].id;
      out[k].pass = false;
      out[k].witness = Witness{"", std::string("exception: ") + e.what()};
    }
  }
  return out;
}

void append(std::vector<SuiteResult>& all, const std::string& suite,
            std::vector<VerifyReport> reps) {
  for (auto& r : reps) all.push_back({suite, std::move(r)});
}

// Per-lambda pairing of R^{-+1} 1_lambda against the expansion terms whose
// trailing idempotent is lambda.
std::vector<RelationPair> r_expansion_catalog(int n) {
  std::vector<RelationPair> out;
  for (int sign : {-1, +1}) {
    Element expansion = r_expansion(n, sign);
    std::string tag = sign < 0 ? "Rinv" : "R";
    for (const auto& lam : enumerate_compositions(n, n)) {
      Element rhs;
      for (const auto& [w, c] : expansion.terms()) {
        const Composition* src = source_idempotent(w);
        if (src && *src == lam) rhs.add_term(w, c);
      }
      Element lhs(Word{Generator::rshift(sign), Generator::idempotent(lam)});
      out.push_back({"r_expansion." + tag + ".1_" + lam.str(), lhs, rhs, n, n});
    }
  }
  return out;
}

std::vector<VerifyReport> divided_power_reports(const SuiteConfig& cfg) {
  std::vector<VerifyReport> out;
  std::mt19937 rng(cfg.seed);
  const int max_a = 3;
  RepConfig rep{cfg.n, cfg.r, -(long)(max_a + 3), (long)(cfg.r + max_a + 3)};
  if (cfg.window) rep = RepConfig{cfg.n, cfg.r, cfg.window->first, cfg.window->second};
  for (int sign : {+1, -1}) {
    for (int i = 1; i <= cfg.n; ++i) {
      for (int a = 2; a <= max_a; ++a) {
        VerifyReport r;
        r.relation = std::string("divided_powers.E") + (sign > 0 ? "" : "-") +
                     std::to_string(i) + "^(" + std::to_string(a) + ")";
        r.lambda = "random";
        long lo = rep.lo + a, hi = rep.hi - a;
        std::uniform_int_distribution<long> dist(lo, hi);
        Generator g = Generator::divided(sign, i, a);
        for (int trial = 0; trial < 100 && r.pass; ++trial) {
          std::vector<long> t(cfg.r);
          for (auto& x : t) x = dist(rng);
          try {
            apply_generator(rep, g, basis_state(rep, t));
          } catch (const std::exception& e) {
            r.pass = false;
            r.witness = Witness{tuple_str(t), std::string("exception: ") + e.what()};
          }
          ++r.vectors_checked;
        }
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

// ---- bubble battery -------------------------------------------------------

std::vector<DigonState> all_digons(int i, int n, int max_dots) {
  std::vector<DigonState> out;
  std::vector<int> d(n, 0);
  while (true) {
    int total = 0;
    for (int x : d) total += x;
    if (total <= max_dots) {
      DigonState s{i, n, {}};
      for (int c = 1; c <= n; ++c) s.dots[c] = d[c - 1];
      out.push_back(std::move(s));
    }
    int k = 0;
    while (k < n && d[k] == max_dots) d[k++] = 0;
    if (k == n) break;
    ++d[k];
  }
  return out;
}

std::string digon_str(const DigonState& d) {
  std::string s = "i=" + std::to_string(d.i) + " dots=(";
  for (int c = 1; c <= d.n; ++c) {
    if (c > 1) s += ",";
    s += std::to_string(d.dot(c));
  }
  return s + ")";
}

// Rewrites every offset-1 CCW bubble through the Grassmannian conversion so
// the result lives in the CW family.
BubblePoly ccw1_to_cw(const BubblePoly& p, int n, bool wrong_sign) {
  std::vector<BubblePoly> conv(n + 1);
  for (int c = 1; c <= n; ++c) conv[c] = ccw_in_cw(c, 1, wrong_sign)[1];
  BubblePoly out;
  for (const auto& [m, coeff] : p.terms()) {
    BubblePoly prod(coeff);
    for (const auto& [s, e] : m) {
      BubblePoly f = s.cw ? BubblePoly::sym(s.color, true, s.offset) : conv[s.color];
      if (!s.cw && s.offset != 1)
        throw UnsupportedSymbol("ccw1_to_cw: offset " + std::to_string(s.offset));
      prod = prod * f.pow(e);
    }
    out = out + prod;
  }
  return out;
}

VerifyReport check_y_eq_z(int n, bool wrong_sign) {
  VerifyReport r;
  r.relation = wrong_sign ? "bubbles.y_eq_z.wrong_sign" : "bubbles.y_eq_z";
  r.lambda = "n=" + std::to_string(n);
  for (int i = 1; i <= n && r.pass; ++i) {
    BubblePoly y = y_poly(i - 1, i, n);
    BubblePoly z = ccw1_to_cw(z_poly(i + 2, i, n), n, wrong_sign);
    ++r.vectors_checked;
    if (!(y == z)) {
      r.pass = false;
      r.witness = Witness{"i=" + std::to_string(i), "y_{i-1} = " + y.str() +
                                                       " vs z_{i+2} -> " + z.str()};
    }
  }
  return r;
}

std::vector<VerifyReport> bubble_reports(int n, unsigned /*seed*/) {
  std::vector<VerifyReport> out;

  // (a) recursion against the z closed form, and (e) the slide to the y form.
  for (int i = 1; i <= n; ++i) {
    VerifyReport ra, re;
    ra.relation = "bubbles.digon_recursive_vs_z.i=" + std::to_string(i);
    re.relation = "bubbles.z_vs_y_slide.i=" + std::to_string(i);
    ra.lambda = re.lambda = "n=" + std::to_string(n);
    for (const auto& d : all_digons(i, n, 4)) {
      BubblePoly zf = digon_closed_form_z(d);
      if (ra.pass) {
        BubblePoly rec = digon_reduce_recursive(d);
        ++ra.vectors_checked;
        if (!(rec == zf)) {
          ra.pass = false;
          ra.witness = Witness{digon_str(d), rec.str() + " vs " + zf.str()};
        }
      }
      if (re.pass) {
        ++re.vectors_checked;
        try {
          BubblePoly slid = slide_convert(zf, i, n, SlideDirection::ToY);
          BubblePoly yf = digon_closed_form_y(d);
          if (!(slid == yf)) {
            re.pass = false;
            re.witness = Witness{digon_str(d), slid.str() + " vs " + yf.str()};
          }
        } catch (const std::exception& e) {
          re.pass = false;
          re.witness = Witness{digon_str(d), std::string("exception: ") + e.what()};
        }
      }
    }
    out.push_back(std::move(ra));
    out.push_back(std::move(re));
  }

  // (b) y_{i-1} = z_{i+2} under the Grassmannian conversion.
  out.push_back(check_y_eq_z(n, false));

  // (c) the convolution identity and the round-trip involution, offsets <= 6.
  for (int c = 1; c <= n; ++c) {
    VerifyReport r;
    r.relation = "bubbles.grassmannian.color=" + std::to_string(c);
    r.lambda = "n=" + std::to_string(n);
    auto ccw = ccw_in_cw(c, 6);
    for (int b = 0; b <= 6 && r.pass; ++b) {
      BubblePoly conv;
      for (int a = 0; a <= b; ++a) conv = conv + ccw[b - a] * BubblePoly::sym(c, true, a);
      BubblePoly expect = b == 0 ? BubblePoly(-1) : BubblePoly();
      ++r.vectors_checked;
      if (!(conv == expect)) {
        r.pass = false;
        r.witness = Witness{"b=" + std::to_string(b), conv.str()};
      }
    }
    // Round trip: rewrite CW(c, b) in CCW generators, then substitute the
    // CCW generators by their CW expressions; must land back on CW(c, b).
    auto cw = cw_in_ccw(c, 6);
    for (int b = 1; b <= 6 && r.pass; ++b) {
      BubblePoly back;
      for (const auto& [m, coeff] : cw[b].terms()) {
        BubblePoly prod(coeff);
        for (const auto& [s, e] : m) prod = prod * ccw[s.offset].pow(e);
        back = back + prod;
      }
      ++r.vectors_checked;
      if (!(back == BubblePoly::sym(c, true, b))) {
        r.pass = false;
        r.witness = Witness{"roundtrip b=" + std::to_string(b), back.str()};
      }
    }
    out.push_back(std::move(r));
  }

  // (d) slides are mutually inverse up to offset 5.
  for (int i = 1; i <= n; ++i) {
    VerifyReport r;
    r.relation = "bubbles.slides_inverse.i=" + std::to_string(i);
    r.lambda = "n=" + std::to_string(n);
    int ip1 = i % n + 1;
    std::vector<BubblePoly> cases;
    for (int s = 0; s <= 5; ++s) cases.push_back(BubblePoly::sym(i, true, s));
    for (int s = 0; s <= 3; ++s)
      cases.push_back(BubblePoly::sym(i, true, s) * z_poly(i - 1, i, n) +
                      BubblePoly(2) * BubblePoly::sym(i, true, 1).pow(2));
    for (const auto& p : cases) {
      ++r.vectors_checked;
      BubblePoly round =
          slide_convert(slide_convert(p, i, n, SlideDirection::ToY), i, n, SlideDirection::ToZ);
      if (!(round == p)) {
        r.pass = false;
        r.witness = Witness{"forward " + p.str(), round.str()};
        break;
      }
    }
    for (int s = 0; s <= 5 && r.pass; ++s) {
      BubblePoly p = BubblePoly::sym(ip1, false, s);
      ++r.vectors_checked;
      BubblePoly round =
          slide_convert(slide_convert(p, i, n, SlideDirection::ToZ), i, n, SlideDirection::ToY);
      if (!(round == p)) {
        r.pass = false;
        r.witness = Witness{"backward " + p.str(), round.str()};
      }
    }
    out.push_back(std::move(r));
  }

  return out;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.n < 2) throw ConfigError("n must be at least 2");
  if (cfg.r < 1) throw ConfigError("r must be at least 1");
  if (cfg.r > cfg.n) throw ConfigError("r must not exceed n");

  std::vector<SuiteKind> kinds = cfg.suites;
  if (kinds.empty()) {
    kinds = {SuiteKind::Presentation, SuiteKind::DividedPowers, SuiteKind::Bubbles};
    if (cfg.r == cfg.n) {
      kinds.insert(kinds.begin() + 1,
                   {SuiteKind::Delta, SuiteKind::RCorollary, SuiteKind::RExpansion,
                    SuiteKind::Iota});
    }
  }

  SuiteReport rep;
  rep.config = cfg;
  for (SuiteKind k : kinds) {
    bool needs_square = k == SuiteKind::Delta || k == SuiteKind::RCorollary ||
                        k == SuiteKind::RExpansion || k == SuiteKind::Iota;
    if (needs_square && cfg.r != cfg.n)
      throw ConfigError(std::string(suite_name(k)) + " suite requires r = n");
    switch (k) {
      case SuiteKind::Presentation:
        append(rep.results, suite_name(k),
               run_relations(schur_relation_catalog(cfg.n, cfg.r), cfg, cfg.n, cfg.r));
        break;
      case SuiteKind::Delta:
        append(rep.results, suite_name(k),
               run_relations(delta_relation_catalog(cfg.n), cfg, cfg.n, cfg.n));
        break;
      case SuiteKind::RCorollary:
        append(rep.results, suite_name(k),
               run_relations(r_corollary_catalog(cfg.n), cfg, cfg.n, cfg.n));
        break;
      case SuiteKind::RExpansion:
        append(rep.results, suite_name(k),
               run_relations(r_expansion_catalog(cfg.n), cfg, cfg.n, cfg.n));
        break;
      case SuiteKind::Iota: {
        std::vector<RelationPair> rels;
        for (const auto& p : schur_relation_catalog(cfg.n, cfg.n)) rels.push_back(iota_image(p));
        for (const auto& p : delta_relation_catalog(cfg.n)) rels.push_back(iota_image(p));
        append(rep.results, suite_name(k), run_relations(rels, cfg, cfg.n + 1, cfg.n));
        break;
      }
      case SuiteKind::DividedPowers:
        append(rep.results, suite_name(k), divided_power_reports(cfg));
        break;
      case SuiteKind::Bubbles:
        append(rep.results, suite_name(k), bubble_reports(cfg.n, cfg.seed));
        break;
    }
  }
  for (const auto& r : rep.results) rep.pass = rep.pass && r.report.pass;
  rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

std::vector<SuiteResult> negative_control_results(int n) {
  std::vector<SuiteResult> out;

  // A rel3 instance with the right-hand coefficient scaled by q.
  RelationPair corrupted;
  for (const auto& p : schur_relation_catalog(n, n)) {
    if (p.id.rfind("rel3", 0) == 0 && !p.rhs.is_zero()) {
      corrupted = p;
      bool nonzero = false;
      for (const auto& [w, c] : p.rhs.terms())
        if (!c.is_zero()) nonzero = true;
      if (nonzero) break;
    }
  }
  corrupted.id = "negative.corrupted(" + corrupted.id + ")";
  corrupted.rhs = corrupted.rhs * RatFunc(Laurent::q(1));
  RepConfig w = auto_window(n, n, {corrupted});
  VerifyReport vr = verify_pair(corrupted, w);
  VerifyReport check;
  check.relation = corrupted.id;
  check.lambda = vr.lambda;
  check.vectors_checked = vr.vectors_checked;
  check.pass = !vr.pass && vr.witness.has_value();
  if (check.pass)
    check.witness = Witness{vr.witness->tuple, "detected: " + vr.witness->residual};
  else
    check.witness = Witness{"", "corruption was NOT detected"};
  out.push_back({"negative_controls", std::move(check)});

  // The flipped bubble sign convention must break y_{i-1} = z_{i+2}.
  VerifyReport wrong = check_y_eq_z(n, true);
  VerifyReport bcheck;
  bcheck.relation = "negative.wrong_sign_bubbles";
  bcheck.lambda = wrong.lambda;
  bcheck.vectors_checked = wrong.vectors_checked;
  bcheck.pass = !wrong.pass && wrong.witness.has_value();
  if (bcheck.pass)
    bcheck.witness = Witness{wrong.witness->tuple, "detected: " + wrong.witness->residual};
  else
    bcheck.witness = Witness{"", "wrong sign convention was NOT detected"};
  out.push_back({"negative_controls", std::move(bcheck)});

  return out;
}

nlohmann::json to_json(const SuiteReport& rep) {
  nlohmann::json j;
  nlohmann::json cfg;
  cfg["n"] = rep.config.n;
  cfg["r"] = rep.config.r;
  if (rep.config.window)
    cfg["window"] = {rep.config.window->first, rep.config.window->second};
  std::vector<std::string> names;
  for (SuiteKind k : rep.config.suites) names.push_back(suite_name(k));
  cfg["suites"] = names;
  cfg["jobs"] = rep.config.jobs;
  cfg["serial"] = rep.config.serial;
  cfg["seed"] = rep.config.seed;
  j["config"] = cfg;
  j["conventions"] = {
      {"bubble_scalars", "CW_0 = +1, CCW_0 = -1; negative offsets vanish"},
      {"coproduct_legs",
       "E_{+i} twists legs to its right (q at residue i, q^-1 at i+1); E_{-i} mirrors on the "
       "left"},
      {"r_expansion_dedup", "one monomial per composition, at i = min{ j : a_j = 0 }"},
      {"window", "auto window [-(L+3), r+L+3], L = longest word span"},
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& res : rep.results) {
    nlohmann::json e;
    e["suite"] = res.suite;
    e["relation"] = res.report.relation;
    e["lambda"] = res.report.lambda;
    e["vectors"] = res.report.vectors_checked;
    e["status"] = res.report.pass ? "pass" : "fail";
    if (res.report.witness)
      e["witness"] = {{"tuple", res.report.witness->tuple},
                      {"residual", res.report.witness->residual}};
    arr.push_back(std::move(e));
  }
  j["reports"] = std::move(arr);
  long failed = 0;
  for (const auto& r : rep.results) failed += r.report.pass ? 0 : 1;
  j["summary"] = {{"total", rep.results.size()},
                  {"passed", rep.results.size() - failed},
                  {"failed", failed},
                  {"overall", rep.pass ? "pass" : "fail"}};
  j["duration_ms"] = rep.duration_ms;
  return j;
}

}  // namespace qschur
