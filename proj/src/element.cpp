#include "qschur/element.hpp"

#include <sstream>

#include "qschur/qcombinat.hpp"

namespace qschur {

std::string Generator::str() const {
  switch (kind) {
    case Kind::EPlus:
      return "E" + std::to_string(color);
    case Kind::EMinus:
      return "E-" + std::to_string(color);
    case Kind::Idem:
      return "1_" + idem.str();
    case Kind::RShiftPlus:
      return "R";
    case Kind::RShiftMinus:
      return "R^-1";
    case Kind::EDeltaPlus:
      return "Ed";
    case Kind::EDeltaMinus:
      return "E-d";
    case Kind::DivPlus:
      return "E" + std::to_string(color) + "^(" + std::to_string(power) + ")";
    case Kind::DivMinus:
      return "E-" + std::to_string(color) + "^(" + std::to_string(power) + ")";
  }
  return "?";
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i].str();
  return out.str();
}

int word_span(const Word& w) {
  int span = 0;
  for (const auto& g : w) {
    switch (g.kind) {
      case Generator::Kind::DivPlus:
      case Generator::Kind::DivMinus:
        span += g.power;
        break;
      default:
        span += 1;
    }
  }
  return span;
}

Weight lambda_shift(const Word& w, int n) {
  Weight total(n, 0);
  for (const auto& g : w) {
    switch (g.kind) {
      case Generator::Kind::EPlus:
        total = add(total, root(Color{g.color}, n));
        break;
      case Generator::Kind::EMinus:
        total = sub(total, root(Color{g.color}, n));
        break;
      case Generator::Kind::DivPlus:
        for (int k = 0; k < g.power; ++k) total = add(total, root(Color{g.color}, n));
        break;
      case Generator::Kind::DivMinus:
        for (int k = 0; k < g.power; ++k) total = sub(total, root(Color{g.color}, n));
        break;
      default:
        break;  // idempotents, R and E_delta preserve the gl-weight sum rule
    }
  }
  return total;
}

const Composition* source_idempotent(const Word& w) {
  if (w.empty()) return nullptr;
  const Generator& g = w.back();
  if (g.kind != Generator::Kind::Idem) return nullptr;
  return &g.idem;
}

Element::Element(Word w, RatFunc coeff) {
  if (!coeff.is_zero()) terms_.emplace(std::move(w), std::move(coeff));
}

void Element::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

Element Element::operator*(const Element& o) const {
  Element r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

Element Element::operator*(const RatFunc& c) const {
  Element r;
  for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c == RatFunc(1)) {
      out << word_str(w);
    } else {
      out << "(" << c.str() << ") " << word_str(w);
    }
  }
  return out.str();
}

Element expand_divided_powers(const Word& w) {
  Word out;
  RatFunc coeff(1);
  for (const auto& g : w) {
    if (g.kind == Generator::Kind::DivPlus || g.kind == Generator::Kind::DivMinus) {
      bool plus = g.kind == Generator::Kind::DivPlus;
      for (int k = 0; k < g.power; ++k)
        out.push_back(plus ? Generator::eplus(g.color) : Generator::eminus(g.color));
      coeff *= RatFunc(Laurent(1), quantum_factorial(g.power));
    } else {
      out.push_back(g);
    }
  }
  return Element(std::move(out), coeff);
}

Element expand_divided_powers(const Element& e) {
  Element r;
  for (const auto& [w, c] : e.terms()) {
    Element ew = expand_divided_powers(w);
    for (const auto& [w2, c2] : ew.terms()) r.add_term(w2, c2 * c);
  }
  return r;
}

}  // namespace qschur
