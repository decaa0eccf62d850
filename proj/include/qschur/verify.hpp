#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschur/catalogs.hpp"
#include "qschur/tensorrep.hpp"

namespace qschur {

struct Witness {
  std::string tuple;
  std::string residual;
};

struct VerifyReport {
  std::string relation;
  std::string lambda;  // weights actually exercised, rendered
  long vectors_checked = 0;
  bool pass = true;
  std::optional<Witness> witness;
};

// Margin implied by a relation: the longest word on either side, so that no
// safe vector can be pushed out of the window by either evaluation.
int relation_margin(const RelationPair& p);

// Checks lhs = rhs on the truncated tensor space, over every safe vector of
// every relevant weight. Relevant weights are the trailing idempotents of the
// words involved; if some word has none, all of Lambda(n,r) is used.
// Denominators are cleared first so evaluation stays in Z[q,q^-1].
VerifyReport verify_pair(const RelationPair& p, const RepConfig& cfg, int margin = -1);

// Window recommended for a batch of relations: [-(L+3), r+L+3] with L the
// largest relation margin.
RepConfig auto_window(int n, int r, const std::vector<RelationPair>& rels);

}  // namespace qschur
