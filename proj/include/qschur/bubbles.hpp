#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qschur/laurent.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// Dotted-bubble generator at ambient label (1^n). Only offsets >= 1 are ring
// generators; offset 0 is the scalar CW_0 = +1, CCW_0 = -1, and negative
// offsets are zero (see BubblePoly::sym).
struct BubbleSym {
  int color = 0;
  bool cw = true;
  int offset = 1;

  // Sort key (color, orientation, offset); CW before CCW within a color.
  auto key() const { return std::make_tuple(color, cw ? 0 : 1, offset); }
  bool operator==(const BubbleSym& o) const { return key() == o.key(); }
  bool operator<(const BubbleSym& o) const { return key() < o.key(); }

  std::string str() const;
};

// Multiset of generators, as symbol -> multiplicity.
using BubbleMono = std::map<BubbleSym, int>;

// Element of the free commutative ring Z[bubble symbols].
class BubblePoly {
 public:
  BubblePoly() = default;
  BubblePoly(long c) { add({}, Int(c)); }
  BubblePoly(const Int& c) { add({}, c); }

  // The symbol as a polynomial, with the offset conventions folded in:
  // offset 0 gives the scalar +-1, offset < 0 gives 0.
  static BubblePoly sym(int color, bool cw, int offset);

  const std::map<BubbleMono, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BubbleMono& m, const Int& c);

  BubblePoly operator+(const BubblePoly& o) const;
  BubblePoly operator-(const BubblePoly& o) const;
  BubblePoly operator-() const;
  BubblePoly operator*(const BubblePoly& o) const;
  BubblePoly pow(int e) const;

  bool operator==(const BubblePoly&) const = default;

  // "-1·ccw[3]_1·ccw[1]_1 + 2·cw[2]_2" style rendering.
  std::string str() const;

 private:
  std::map<BubbleMono, Int> terms_;
};

// Given the generating sequence S_0, S_1, ... of one orientation (S_0 must be
// the scalar +-1), returns the opposite-orientation sequence T_b solving the
// infinite Grassmannian convolution sum_{a=0}^{b} T_{b-a} S_a = -delta_{b,0}.
// wrong_sign flips the right-hand side to +delta_{b,0}; it exists only so the
// negative-control suite can demonstrate that the sign convention is load-
// bearing.
std::vector<BubblePoly> grassmannian_convert(const std::vector<BubblePoly>& series,
                                             bool wrong_sign = false);

// CCW(c, b) for b = 0..max_offset written in CW(c, *) generators, and the
// reverse.
std::vector<BubblePoly> ccw_in_cw(int color, int max_offset, bool wrong_sign = false);
std::vector<BubblePoly> cw_in_ccw(int color, int max_offset, bool wrong_sign = false);

// z_m: minus the sum of offset-1 CCW bubbles over the colors i-1, i-2, ...
// walked cyclically down to m; z_i = 0.
BubblePoly z_poly(int m, int i, int n);
// y_m: minus the sum of offset-1 CW bubbles over the colors m, m-1, ...
// walked cyclically down to i+2; y_{i+1} = 0.
BubblePoly y_poly(int m, int i, int n);

// Two-strand digon with per-strand dot counts, base color i.
struct DigonState {
  int i = 1;
  int n = 2;
  std::map<int, int> dots;  // one key per color 1..n, values >= 0

  int dot(int c) const;
  int total_dots() const;
};

// Peels dots off the off-i strands one at a time, nearest strand first
// (cyclic order i-1, i-2, ..., i+1), via
//   D(..., s_m, ...) = D(s_i + 1, ..., s_m - 1, ...) + z_m * D(s_i, ..., s_m - 1, ...),
// down to the base case D(t dots on strand i) = CW(i, t).
BubblePoly digon_reduce_recursive(const DigonState& d);

// Closed form in the z / CW(i) family:
//   sum over j (one index per off-i strand, 0 <= j_m <= s_m) of
//   prod binom(s_m, j_m) * prod z_m^{j_m} * CW(i, sum s - sum j).
BubblePoly digon_closed_form_z(const DigonState& d);

// Closed form in the y / CCW(i+1) family, indices over strands other than i+1.
BubblePoly digon_closed_form_y(const DigonState& d);

enum class SlideDirection {
  ToY,  // z / CW(i) family  ->  y / CCW(i+1) family
  ToZ,  // y / CCW(i+1) family  ->  z / CW(i) family
};

// Linear substitution induced by the bubble slide relations
//   CCW(i+1, s) = sum_j binom(s,j) CW(i, s-j) z_{i+1}^j   (and its reverse),
// extended multiplicatively. ToY accepts CW(i, *) and offset-1 CCW bubbles of
// colors != i; ToZ accepts CCW(i+1, *) and offset-1 CW bubbles of colors
// != i+1. Anything else throws UnsupportedSymbol.
BubblePoly slide_convert(const BubblePoly& p, int i, int n, SlideDirection dir);

}  // namespace qschur
