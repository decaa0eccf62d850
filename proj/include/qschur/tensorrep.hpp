#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qschur/element.hpp"
#include "qschur/laurent.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// Windowed truncation of the tensor space V^{x r} over the n-colored basis
// e_t, t in Z. Every basis index of every state must stay inside [lo, hi];
// stepping outside raises WindowOverflow rather than silently truncating.
struct RepConfig {
  int n = 0;
  int r = 0;
  long lo = 0;
  long hi = 0;

  long width() const { return hi - lo + 1; }

  std::uint64_t encode(std::span<const long> tuple) const;
  std::vector<long> decode(std::uint64_t idx) const;
};

// Sparse vector in the truncated tensor space; amplitudes stay in Z[q,q^-1].
using TensorState = std::map<std::uint64_t, Laurent>;

TensorState basis_state(const RepConfig& cfg, std::span<const long> tuple);

// Action of a single generator via the iterated coproduct. Divided powers
// are a-fold applications divided exactly by [a]!; non-exact division throws
// NotDivisible (an integrality failure).
TensorState apply_generator(const RepConfig& cfg, const Generator& g, const TensorState& s);

// Words act right-to-left: apply_word(w) = w[0] ( w[1] ( ... s ) ).
TensorState apply_word(const RepConfig& cfg, const Word& w, const TensorState& s);

// Full element action with Q(q) coefficients, for the compute path.
std::map<std::uint64_t, RatFunc> apply_element(const RepConfig& cfg, const Element& e,
                                               const TensorState& s);

// All tuples with entries in [lo+margin, hi-margin] whose weight is lam,
// ordered lexicographically. Throws EmptySafeInterior when the margin
// exhausts the window.
std::vector<std::vector<long>> safe_basis(const RepConfig& cfg, const Composition& lam,
                                          int margin);

std::string tuple_str(std::span<const long> tuple);

}  // namespace qschur
