#include "qschur/verify.hpp"

#include <algorithm>
#include <set>

#include "qschur/errors.hpp"

namespace qschur {

namespace {

// Signed polynomial terms of D * (lhs - rhs) for the common denominator D.
std::vector<std::pair<Word, Laurent>> cleared_difference(const RelationPair& p) {
  Element diff = p.lhs - p.rhs;
  Laurent d(1);
  for (const auto& [w, c] : diff.terms()) {
    const Laurent& den = c.den();
    d = exact_divide(d * den, Laurent::gcd(d, den));
  }
  std::vector<std::pair<Word, Laurent>> out;
  for (const auto& [w, c] : diff.terms())
    out.emplace_back(w, c.num() * exact_divide(d, c.den()));
  return out;
}

std::set<Composition> relevant_weights(const RelationPair& p, bool& all) {
  std::set<Composition> out;
  all = false;
  for (const Element* side : {&p.lhs, &p.rhs}) {
    for (const auto& [w, c] : side->terms()) {
      const Composition* lam = source_idempotent(w);
      if (!lam) {
        all = true;
        return out;
      }
      out.insert(*lam);
    }
  }
  return out;
}

}  // namespace

int relation_margin(const RelationPair& p) {
  int m = 1;
  for (const Element* side : {&p.lhs, &p.rhs})
    for (const auto& [w, c] : side->terms()) m = std::max(m, word_span(w));
  return m;
}

VerifyReport verify_pair(const RelationPair& p, const RepConfig& cfg, int margin) {
  if (margin < 0) margin = relation_margin(p);
  VerifyReport rep;
  rep.relation = p.id;

  auto terms = cleared_difference(p);
  bool all = false;
  std::set<Composition> lams = relevant_weights(p, all);
  std::vector<Composition> weights;
  if (all) {
    auto every = enumerate_compositions(cfg.n, cfg.r);
    weights.assign(every.begin(), every.end());
    rep.lambda = "all";
  } else {
    weights.assign(lams.begin(), lams.end());
    std::string s;
    for (const auto& lam : weights) {
      if (!s.empty()) s += " ";
      s += lam.str();
    }
    rep.lambda = s;
  }

  for (const auto& lam : weights) {
    for (const auto& v : safe_basis(cfg, lam, margin)) {
      TensorState acc;
      TensorState start = basis_state(cfg, v);
      for (const auto& [w, c] : terms) {
        if (c.is_zero()) continue;
        TensorState t = apply_word(cfg, w, start);
        for (const auto& [idx, amp] : t) {
          auto it = acc.find(idx);
          if (it == acc.end()) {
            Laurent x = amp * c;
            if (!x.is_zero()) acc.emplace(idx, std::move(x));
          } else {
            it->second += amp * c;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
      }
      ++rep.vectors_checked;
      if (!acc.empty()) {
        rep.pass = false;
        const auto& [idx, amp] = *acc.begin();
        rep.witness = Witness{tuple_str(v) + " -> " + tuple_str(cfg.decode(idx)), amp.str()};
        return rep;
      }
    }
  }
  return rep;
}

RepConfig auto_window(int n, int r, const std::vector<RelationPair>& rels) {
  int l = 1;
  for (const auto& p : rels) l = std::max(l, relation_margin(p));
  return RepConfig{n, r, -(long)(l + 3), (long)(r + l + 3)};
}

}  // namespace qschur
