#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/ratfunc.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// Formal generator of the idempotented algebras. DividedPower with a == 1
// is normalized to EPlus/EMinus at construction.
struct Generator {
  enum class Kind {
    EPlus,        // E_{+i}
    EMinus,       // E_{-i}
    Idem,         // 1_lambda
    RShiftPlus,   // R
    RShiftMinus,  // R^-1
    EDeltaPlus,   // E_{+delta}
    EDeltaMinus,  // E_{-delta}
    DivPlus,      // E_{+i}^{(a)}
    DivMinus,     // E_{-i}^{(a)}
  };

  Kind kind;
  int color = 0;  // for E and divided powers
  int power = 1;  // for divided powers
  Composition idem;

  static Generator eplus(int i) { return {Kind::EPlus, i}; }
  static Generator eminus(int i) { return {Kind::EMinus, i}; }
  static Generator idempotent(Composition lam) { return {Kind::Idem, 0, 1, std::move(lam)}; }
  static Generator rshift(int sign) {
    return {sign > 0 ? Kind::RShiftPlus : Kind::RShiftMinus};
  }
  static Generator edelta(int sign) {
    return {sign > 0 ? Kind::EDeltaPlus : Kind::EDeltaMinus};
  }
  static Generator divided(int sign, int i, int a) {
    if (a == 1) return sign > 0 ? eplus(i) : eminus(i);
    return {sign > 0 ? Kind::DivPlus : Kind::DivMinus, i, a};
  }

  bool operator==(const Generator&) const = default;
  auto operator<=>(const Generator&) const = default;

  std::string str() const;
};

// A word is a product of generators, leftmost factor first; evaluation acts
// right-to-left.
using Word = std::vector<Generator>;

std::string word_str(const Word& w);

// Number of E-factors once divided powers are expanded; R, E_delta and
// idempotents count 1 (they move the window by at most one step).
int word_span(const Word& w);

// Net weight shift of a signed sequence: sum of +-alpha_{i_k} over the
// E-factors of w (divided powers weighted by their exponent).
Weight lambda_shift(const Word& w, int n);

// Rightmost idempotent of the word, if any: the only weight space on which
// the word can act nontrivially from the right.
const Composition* source_idempotent(const Word& w);

// Finite Q(q)-linear combination of words.
class Element {
 public:
  Element() = default;
  explicit Element(Word w, RatFunc coeff = RatFunc(1));

  static Element zero() { return Element(); }

  const std::map<Word, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const RatFunc& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // word concatenation
  Element operator*(const RatFunc& c) const;

  bool operator==(const Element&) const = default;

  std::string str() const;

 private:
  std::map<Word, RatFunc> terms_;
};

// Replaces each divided power E_{+-i}^{(a)} by E_{+-i}^a with coefficient 1/[a]!.
Element expand_divided_powers(const Word& w);
Element expand_divided_powers(const Element& e);

}  // namespace qschur
