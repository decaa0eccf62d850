#pragma once

#include <string>
#include <vector>

#include "qschur/element.hpp"

namespace qschur {

// One instance of a defining relation, as a pair of elements claimed equal
// in the ambient algebra S(n,r).
struct RelationPair {
  std::string id;
  Element lhs, rhs;
  int n = 0, r = 0;
};

// Colors i-1, i-2, ..., 1, n, ..., i+1 (all colors except i, descending cyclically).
std::vector<int> chain_desc_skip(int i, int n);
// Colors i+1, i+2, ..., n, 1, ..., i-1 (all colors except i, ascending cyclically).
std::vector<int> chain_asc_skip(int i, int n);

// Every instance of rel1..rel5 over Lambda(n,r); idempotents falling outside
// Lambda(n,r) are replaced by the zero element.
std::vector<RelationPair> schur_relation_catalog(int n, int r);

// The eleven extra relation families of S(n,n), instantiated for i = 1..n.
std::vector<RelationPair> delta_relation_catalog(int n);

// R R^-1 = R^-1 R = 1, R E_{+-i} R^-1 = E_{+-(i+1)}, R 1_lam R^-1 = 1_{rot lam}.
std::vector<RelationPair> r_corollary_catalog(int n);

// Expansion of R^{-sign}: E_{+-delta}1_n plus one divided-power
// monomial per composition of Lambda(n,n) with a zero entry, deduplicated by
// i = min{ j : a_j = 0 }. sign = -1 yields R^-1 (plus generators), sign = +1
// yields R (minus generators).
Element r_expansion(int n, int sign);

}  // namespace qschur
