#include "qschur/iota.hpp"

#include "qschur/errors.hpp"

namespace qschur {

namespace {

Composition extend(const Composition& lam) {
  std::vector<int> e = lam.entries();
  e.push_back(0);
  return Composition(std::move(e));
}

Composition unit_ext(int n) {
  std::vector<int> e(n, 1);
  e.push_back(0);
  return Composition(std::move(e));
}

void append_image(Word& out, const Generator& g, int n) {
  using K = Generator::Kind;
  switch (g.kind) {
    case K::Idem:
      out.push_back(Generator::idempotent(extend(g.idem)));
      break;
    case K::EPlus:
      if (g.color < n) {
        out.push_back(g);
      } else {
        // E_n -> E_n E_{n+1}
        out.push_back(Generator::eplus(n));
        out.push_back(Generator::eplus(n + 1));
      }
      break;
    case K::EMinus:
      if (g.color < n) {
        out.push_back(g);
      } else {
        // E_{-n} -> E_{-(n+1)} E_{-n}
        out.push_back(Generator::eminus(n + 1));
        out.push_back(Generator::eminus(n));
      }
      break;
    case K::DivPlus:
    case K::DivMinus:
      if (g.color < n) {
        out.push_back(g);
      } else {
        throw UnmappedGenerator("iota: divided power of color n; expand first");
      }
      break;
    case K::EDeltaPlus:
      // E_{+delta} 1_n -> E_n E_{n-1} ... E_1 E_{n+1} 1_{(1^n,0)}
      for (int c = n; c >= 1; --c) out.push_back(Generator::eplus(c));
      out.push_back(Generator::eplus(n + 1));
      out.push_back(Generator::idempotent(unit_ext(n)));
      break;
    case K::EDeltaMinus:
      // E_{-delta} 1_n -> E_{-(n+1)} E_{-1} ... E_{-n} 1_{(1^n,0)}
      out.push_back(Generator::eminus(n + 1));
      for (int c = 1; c <= n; ++c) out.push_back(Generator::eminus(c));
      out.push_back(Generator::idempotent(unit_ext(n)));
      break;
    case K::RShiftPlus:
    case K::RShiftMinus:
      throw UnmappedGenerator("iota: R^{+-1} must be rewritten via r_expansion first");
  }
}

}  // namespace

Word iota_image_word(const Word& w, int n) {
  Word out;
  for (const auto& g : w) append_image(out, g, n);
  return out;
}

Element iota_image(const Element& e, int n, bool rewrite_r) {
  // Rewrite R^{+-1} factors first, then expand divided powers so that color-n
  // divided powers become mappable.
  Element rewritten;
  for (const auto& [w, c] : e.terms()) {
    Element prod(Word{}, RatFunc(1));
    for (const auto& g : w) {
      if (g.kind == Generator::Kind::RShiftPlus || g.kind == Generator::Kind::RShiftMinus) {
        if (!rewrite_r) throw UnmappedGenerator("iota: R with rewriting disabled");
        prod = prod * r_expansion(n, g.kind == Generator::Kind::RShiftPlus ? +1 : -1);
      } else {
        prod = prod * Element(Word{g});
      }
    }
    for (const auto& [w2, c2] : prod.terms()) rewritten.add_term(w2, c2 * c);
  }
  Element expanded = expand_divided_powers(rewritten);
  Element out;
  for (const auto& [w, c] : expanded.terms()) out.add_term(iota_image_word(w, n), c);
  return out;
}

RelationPair iota_image(const RelationPair& p) {
  return {"iota(" + p.id + ")", iota_image(p.lhs, p.n), iota_image(p.rhs, p.n), p.n + 1, p.r};
}

}  // namespace qschur
