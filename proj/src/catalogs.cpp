#include "qschur/catalogs.hpp"

#include <stdexcept>

#include "qschur/qcombinat.hpp"

namespace qschur {

std::vector<int> chain_desc_skip(int i, int n) {
  std::vector<int> out;
  Color c = prev_color(Color{i}, n);
  while (c.index != i) {
    out.push_back(c.index);
    c = prev_color(c, n);
  }
  return out;
}

std::vector<int> chain_asc_skip(int i, int n) {
  std::vector<int> out;
  Color c = next_color(Color{i}, n);
  while (c.index != i) {
    out.push_back(c.index);
    c = next_color(c, n);
  }
  return out;
}

namespace {

Element idem_or_zero(const Weight& w, int n, int r) {
  if (!in_lambda(w, n, r)) return Element::zero();
  return Element(Word{Generator::idempotent(Composition(w))});
}

std::string tag(const std::string& rel, const std::string& detail) {
  return rel + "[" + detail + "]";
}

}  // namespace

std::vector<RelationPair> schur_relation_catalog(int n, int r) {
  if (n < 3) throw std::invalid_argument("schur_relation_catalog: need n >= 3");
  if (r > n) throw std::invalid_argument("schur_relation_catalog: need r <= n");
  std::vector<RelationPair> out;
  auto lambdas = enumerate_compositions(n, r);

  // rel1: 1_lam 1_mu = delta 1_lam
  for (const auto& lam : lambdas)
    for (const auto& mu : lambdas) {
      Element lhs(Word{Generator::idempotent(lam), Generator::idempotent(mu)});
      Element rhs = lam == mu ? Element(Word{Generator::idempotent(lam)}) : Element::zero();
      out.push_back({tag("rel1", lam.str() + "," + mu.str()), lhs, rhs, n, r});
    }

  // rel2: E_{+-i} 1_lam = 1_{lam +- alpha_i} E_{+-i}
  for (int sign : {+1, -1})
    for (int i = 1; i <= n; ++i)
      for (const auto& lam : lambdas) {
        Generator e = sign > 0 ? Generator::eplus(i) : Generator::eminus(i);
        Element lhs(Word{e, Generator::idempotent(lam)});
        Weight shifted = sign > 0 ? add(lam.entries(), root(Color{i}, n))
                                  : sub(lam.entries(), root(Color{i}, n));
        Element rhs = idem_or_zero(shifted, n, r) * Element(Word{e});
        std::string s = sign > 0 ? "+" : "-";
        out.push_back({tag("rel2", "i=" + s + std::to_string(i) + ",lam=" + lam.str()),
                       lhs, rhs, n, r});
      }

  // rel3: (E_i E_{-j} - E_{-j} E_i) 1_lam = delta_{ij} [lam_i - lam_{i+1}] 1_lam
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& lam : lambdas) {
        Word idw{Generator::idempotent(lam)};
        Element lhs = Element(Word{Generator::eplus(i), Generator::eminus(j),
                                   Generator::idempotent(lam)}) -
                      Element(Word{Generator::eminus(j), Generator::eplus(i),
                                   Generator::idempotent(lam)});
        Element rhs;
        if (i == j) {
          long diff = lam[i - 1] - lam[next_color(Color{i}, n).index - 1];
          rhs = Element(idw, RatFunc(quantum_int(diff)));
        }
        out.push_back({tag("rel3", "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                       ",lam=" + lam.str()),
                       lhs, rhs, n, r});
      }

  // rel4 / rel5: same-sign Serre relations; |i-j| = 1 mod n picks rel4.
  for (int sign : {+1, -1})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        bool adjacent = next_color(Color{i}, n).index == j || prev_color(Color{i}, n).index == j;
        if (!adjacent && i > j) continue;  // rel5 is symmetric in i,j
        auto e = [&](int c) {
          return sign > 0 ? Generator::eplus(c) : Generator::eminus(c);
        };
        std::string s = sign > 0 ? "+" : "-";
        for (const auto& lam : lambdas) {
          Generator id = Generator::idempotent(lam);
          if (adjacent) {
            Element lhs = Element(Word{e(i), e(i), e(j), id}) -
                          Element(Word{e(i), e(j), e(i), id},
                                  RatFunc(quantum_int(2))) +
                          Element(Word{e(j), e(i), e(i), id});
            out.push_back({tag("rel4", "i=" + s + std::to_string(i) + ",j=" + s +
                                           std::to_string(j) + ",lam=" + lam.str()),
                           lhs, Element::zero(), n, r});
          } else {
            Element lhs =
                Element(Word{e(i), e(j), id}) - Element(Word{e(j), e(i), id});
            out.push_back({tag("rel5", "i=" + s + std::to_string(i) + ",j=" + s +
                                           std::to_string(j) + ",lam=" + lam.str()),
                           lhs, Element::zero(), n, r});
          }
        }
      }

  return out;
}

std::vector<RelationPair> delta_relation_catalog(int n) {
  if (n < 3) throw std::invalid_argument("delta_relation_catalog: need n >= 3");
  std::vector<RelationPair> out;
  auto lambdas = enumerate_compositions(n, n);
  Composition unit(std::vector<int>(n, 1));
  Generator one = Generator::idempotent(unit);

  for (int sign : {+1, -1}) {
    Generator ed = Generator::edelta(sign);
    std::string s = sign > 0 ? "+d" : "-d";
    // (i): E_{+-delta} is supported on 1_n only.
    for (const auto& lam : lambdas) {
      if (lam == unit) continue;
      out.push_back({tag("delta.i", s + ",lam=" + lam.str() + ",right"),
                     Element(Word{ed, Generator::idempotent(lam)}), Element::zero(), n, n});
      out.push_back({tag("delta.i", s + ",lam=" + lam.str() + ",left"),
                     Element(Word{Generator::idempotent(lam), ed}), Element::zero(), n, n});
    }
    // (ii): E_{+-delta} 1_n = 1_n E_{+-delta}.
    out.push_back({tag("delta.ii", s), Element(Word{ed, one}), Element(Word{one, ed}), n, n});
  }

  // (iii)
  out.push_back({tag("delta.iii", "+-"),
                 Element(Word{Generator::edelta(+1), Generator::edelta(-1), one}),
                 Element(Word{one}), n, n});
  out.push_back({tag("delta.iii", "-+"),
                 Element(Word{Generator::edelta(-1), Generator::edelta(+1), one}),
                 Element(Word{one}), n, n});

  for (int i = 1; i <= n; ++i) {
    auto desc = chain_desc_skip(i, n);  // i-1 ... 1 n ... i+1
    auto asc = chain_asc_skip(i, n);    // i+1 ... n 1 ... i-1
    std::string si = "i=" + std::to_string(i);

    // (iv): E_i E_{+d} 1_n = E_i^{(2)} E_{i-1}...E_{i+1} 1_n
    {
      Word rhs{Generator::divided(+1, i, 2)};
      for (int c : desc) rhs.push_back(Generator::eplus(c));
      rhs.push_back(one);
      out.push_back({tag("delta.iv", si),
                     Element(Word{Generator::eplus(i), Generator::edelta(+1), one}),
                     Element(rhs), n, n});
    }
    // (v): 1_n E_{+d} E_i = 1_n E_{i-1}...E_{i+1} E_i^{(2)}
    {
      Word rhs{one};
      for (int c : desc) rhs.push_back(Generator::eplus(c));
      rhs.push_back(Generator::divided(+1, i, 2));
      out.push_back({tag("delta.v", si),
                     Element(Word{one, Generator::edelta(+1), Generator::eplus(i)}),
                     Element(rhs), n, n});
    }
    // (vi): E_{-i} E_{+d} 1_n = E_{i-1}...E_{i+1} 1_n
    {
      Word rhs;
      for (int c : desc) rhs.push_back(Generator::eplus(c));
      rhs.push_back(one);
      out.push_back({tag("delta.vi", si),
                     Element(Word{Generator::eminus(i), Generator::edelta(+1), one}),
                     Element(rhs), n, n});
    }
    // (vii): 1_n E_{+d} E_{-i} = 1_n E_{i-1}...E_{i+1}
    {
      Word rhs{one};
      for (int c : desc) rhs.push_back(Generator::eplus(c));
      out.push_back({tag("delta.vii", si),
                     Element(Word{one, Generator::edelta(+1), Generator::eminus(i)}),
                     Element(rhs), n, n});
    }
    // (viii): E_{-i} E_{-d} 1_n = E_{-i}^{(2)} E_{-(i+1)}...E_{-(i-1)} 1_n
    {
      Word rhs{Generator::divided(-1, i, 2)};
      for (int c : asc) rhs.push_back(Generator::eminus(c));
      rhs.push_back(one);
      out.push_back({tag("delta.viii", si),
                     Element(Word{Generator::eminus(i), Generator::edelta(-1), one}),
                     Element(rhs), n, n});
    }
    // (ix): 1_n E_{-d} E_{-i} = 1_n E_{-(i+1)}...E_{-(i-1)} E_{-i}^{(2)}
    {
      Word rhs{one};
      for (int c : asc) rhs.push_back(Generator::eminus(c));
      rhs.push_back(Generator::divided(-1, i, 2));
      out.push_back({tag("delta.ix", si),
                     Element(Word{one, Generator::edelta(-1), Generator::eminus(i)}),
                     Element(rhs), n, n});
    }
    // (x): E_i E_{-d} 1_n = E_{-(i+1)}...E_{-(i-1)} 1_n
    {
      Word rhs;
      for (int c : asc) rhs.push_back(Generator::eminus(c));
      rhs.push_back(one);
      out.push_back({tag("delta.x", si),
                     Element(Word{Generator::eplus(i), Generator::edelta(-1), one}),
                     Element(rhs), n, n});
    }
    // (xi): 1_n E_{-d} E_i = 1_n E_{-(i+1)}...E_{-(i-1)}
    {
      Word rhs{one};
      for (int c : asc) rhs.push_back(Generator::eminus(c));
      out.push_back({tag("delta.xi", si),
                     Element(Word{one, Generator::edelta(-1), Generator::eplus(i)}),
                     Element(rhs), n, n});
    }
  }
  return out;
}

std::vector<RelationPair> r_corollary_catalog(int n) {
  if (n < 3) throw std::invalid_argument("r_corollary_catalog: need n >= 3");
  std::vector<RelationPair> out;
  auto lambdas = enumerate_compositions(n, n);
  Generator rp = Generator::rshift(+1), rm = Generator::rshift(-1);

  out.push_back({"rcor.RRinv", Element(Word{rp, rm}), Element(Word{}), n, n});
  out.push_back({"rcor.RinvR", Element(Word{rm, rp}), Element(Word{}), n, n});

  for (const auto& lam : lambdas) {
    Element lhs(Word{rp, Generator::idempotent(lam), rm});
    Element rhs(Word{Generator::idempotent(Composition(rotate(lam.entries())))});
    out.push_back({tag("rcor.rot", "lam=" + lam.str()), lhs, rhs, n, n});
  }

  for (int sign : {+1, -1})
    for (int i = 1; i <= n; ++i)
      for (const auto& lam : lambdas) {
        auto e = [&](int c) {
          return sign > 0 ? Generator::eplus(c) : Generator::eminus(c);
        };
        Element lhs(Word{rp, e(i), rm, Generator::idempotent(lam)});
        Element rhs(Word{e(next_color(Color{i}, n).index), Generator::idempotent(lam)});
        std::string s = sign > 0 ? "+" : "-";
        out.push_back({tag("rcor.conj", "i=" + s + std::to_string(i) + ",lam=" + lam.str()),
                       lhs, rhs, n, n});
      }
  return out;
}

Element r_expansion(int n, int sign) {
  if (n < 3) throw std::invalid_argument("r_expansion: need n >= 3");
  if (sign != 1 && sign != -1) throw std::invalid_argument("r_expansion: sign must be +-1");
  Composition unit(std::vector<int>(n, 1));
  // R^-1 = E_{+delta} 1_n + ..., R = E_{-delta} 1_n + ...
  Element result(Word{Generator::edelta(-sign), Generator::idempotent(unit)});

  for (const auto& a : enumerate_compositions(n, n)) {
    int i = 0;
    for (int j = 1; j <= n; ++j)
      if (a[j - 1] == 0) {
        i = j;
        break;
      }
    if (i == 0) continue;  // no zero entry: only (1^n), handled by the delta term
    // In this representation the plus monomials collapse with the colors in
    // descending word order and the minus monomials with them in ascending
    // word order, mirroring the chain orders of the two E_{+-delta} relation
    // families.
    Word w;
    for (int c : sign < 0 ? chain_desc_skip(i, n) : chain_asc_skip(i, n))
      if (a[c - 1] > 0) w.push_back(Generator::divided(sign < 0 ? +1 : -1, c, a[c - 1]));
    if (sign < 0) {
      // 1_{(a_n, a_1, ..., a_{n-1})}
      w.push_back(Generator::idempotent(Composition(rotate(a.entries()))));
    } else {
      w.push_back(Generator::idempotent(a));
    }
    result.add_term(w, RatFunc(1));
  }
  return result;
}

}  // namespace qschur
