#include "qschur/bubbles.hpp"

#include <stdexcept>

#include "qschur/errors.hpp"
#include "qschur/qcombinat.hpp"

namespace qschur {

namespace {

int cyc(int c, int n) { return (c % n + n - 1) % n + 1; }
int nxt(int c, int n) { return cyc(c + 1, n); }
int prv(int c, int n) { return cyc(c - 1, n); }

}  // namespace

std::string BubbleSym::str() const {
  return (cw ? std::string("cw[") : std::string("ccw[")) + std::to_string(color) + "]_" +
         std::to_string(offset);
}

BubblePoly BubblePoly::sym(int color, bool cw, int offset) {
  if (offset < 0) return BubblePoly();
  if (offset == 0) return BubblePoly(cw ? 1 : -1);
  BubblePoly p;
  p.add({{BubbleSym{color, cw, offset}, 1}}, Int(1));
  return p;
}

void BubblePoly::add(const BubbleMono& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BubblePoly BubblePoly::operator+(const BubblePoly& o) const {
  BubblePoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

BubblePoly BubblePoly::operator-(const BubblePoly& o) const {
  BubblePoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, -c);
  return out;
}

BubblePoly BubblePoly::operator-() const { return BubblePoly() - *this; }

BubblePoly BubblePoly::operator*(const BubblePoly& o) const {
  BubblePoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      BubbleMono m = m1;
      for (const auto& [s, e] : m2) m[s] += e;
      out.add(m, c1 * c2);
    }
  }
  return out;
}

BubblePoly BubblePoly::pow(int e) const {
  BubblePoly out(1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string BubblePoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string coeff = a.get_str();
    if (m.empty()) {
      s += coeff;
      continue;
    }
    bool wrote = false;
    if (coeff != "1") {
      s += coeff;
      wrote = true;
    }
    for (const auto& [sym, e] : m) {
      for (int k = 0; k < e; ++k) {
        if (wrote) s += "·";
        s += sym.str();
        wrote = true;
      }
    }
  }
  return s;
}

std::vector<BubblePoly> grassmannian_convert(const std::vector<BubblePoly>& series,
                                             bool wrong_sign) {
  if (series.empty()) return {};
  const BubblePoly& s0 = series[0];
  Int unit;
  if (s0.terms().size() == 1 && s0.terms().begin()->first.empty())
    unit = s0.terms().begin()->second;
  if (unit != 1 && unit != -1)
    throw std::invalid_argument("grassmannian_convert: offset-0 entry must be the scalar +-1");
  long rhs0 = wrong_sign ? +1 : -1;
  std::vector<BubblePoly> t;
  t.reserve(series.size());
  t.push_back(BubblePoly(rhs0 * (unit == 1 ? 1 : -1)));
  for (size_t b = 1; b < series.size(); ++b) {
    BubblePoly acc;
    for (size_t a = 1; a <= b; ++a) acc = acc + t[b - a] * series[a];
    // T_b = S_0^{-1} (0 - acc); S_0 = +-1.
    t.push_back(unit == 1 ? -acc : acc);
  }
  return t;
}

std::vector<BubblePoly> ccw_in_cw(int color, int max_offset, bool wrong_sign) {
  std::vector<BubblePoly> s;
  for (int a = 0; a <= max_offset; ++a) s.push_back(BubblePoly::sym(color, true, a));
  return grassmannian_convert(s, wrong_sign);
}

std::vector<BubblePoly> cw_in_ccw(int color, int max_offset, bool wrong_sign) {
  std::vector<BubblePoly> s;
  for (int a = 0; a <= max_offset; ++a) s.push_back(BubblePoly::sym(color, false, a));
  return grassmannian_convert(s, wrong_sign);
}

BubblePoly z_poly(int m, int i, int n) {
  m = cyc(m, n);
  i = cyc(i, n);
  if (m == i) return BubblePoly();
  BubblePoly out;
  for (int c = prv(i, n);; c = prv(c, n)) {
    out = out - BubblePoly::sym(c, false, 1);
    if (c == m) break;
  }
  return out;
}

BubblePoly y_poly(int m, int i, int n) {
  m = cyc(m, n);
  i = cyc(i, n);
  if (m == nxt(i, n)) return BubblePoly();
  BubblePoly out;
  int stop = nxt(nxt(i, n), n);  // i+2
  for (int c = m;; c = prv(c, n)) {
    out = out - BubblePoly::sym(c, true, 1);
    if (c == stop) break;
  }
  return out;
}

int DigonState::dot(int c) const {
  auto it = dots.find(c);
  return it == dots.end() ? 0 : it->second;
}

int DigonState::total_dots() const {
  int t = 0;
  for (const auto& [c, s] : dots) t += s;
  return t;
}

// Strand order i-1, i-2, ..., i+1 (all colors but i, walked cyclically down).
static std::vector<int> off_strands(int i, int n) {
  std::vector<int> out;
  for (int c = prv(i, n); c != i; c = prv(c, n)) out.push_back(c);
  return out;
}

BubblePoly digon_reduce_recursive(const DigonState& d) {
  for (int m : off_strands(d.i, d.n)) {
    if (d.dot(m) == 0) continue;
    DigonState bumped = d;
    --bumped.dots[m];
    DigonState plain = bumped;
    ++bumped.dots[d.i];
    return digon_reduce_recursive(bumped) + z_poly(m, d.i, d.n) * digon_reduce_recursive(plain);
  }
  return BubblePoly::sym(d.i, true, d.dot(d.i));
}

namespace {

// Sum over independent indices 0 <= j_m <= dots(m) for the given strands, of
// prod binom(s_m, j_m) * prod box(m)^{j_m} * head(sum s - sum j), where
// "sum s" ranges over all dots including the head strand's own.
template <typename Box, typename Head>
BubblePoly digon_sum(const DigonState& d, const std::vector<int>& strands, Box box, Head head) {
  std::vector<int> j(strands.size(), 0);
  int total = d.total_dots();
  BubblePoly out;
  while (true) {
    Int coeff(1);
    BubblePoly mono(1);
    int jsum = 0;
    for (size_t k = 0; k < strands.size(); ++k) {
      coeff *= binomial(d.dot(strands[k]), j[k]);
      mono = mono * box(strands[k]).pow(j[k]);
      jsum += j[k];
    }
    out = out + mono * head(total - jsum) * BubblePoly(coeff);
    size_t k = 0;
    while (k < strands.size() && j[k] == d.dot(strands[k])) j[k++] = 0;
    if (k == strands.size()) break;
    ++j[k];
  }
  return out;
}

}  // namespace

BubblePoly digon_closed_form_z(const DigonState& d) {
  return digon_sum(
      d, off_strands(d.i, d.n), [&](int m) { return z_poly(m, d.i, d.n); },
      [&](int a) { return BubblePoly::sym(d.i, true, a); });
}

BubblePoly digon_closed_form_y(const DigonState& d) {
  int ip1 = nxt(d.i, d.n);
  std::vector<int> strands;
  for (int c = d.i; c != ip1; c = prv(c, d.n)) strands.push_back(c);
  return digon_sum(
      d, strands, [&](int m) { return y_poly(m, d.i, d.n); },
      [&](int a) { return BubblePoly::sym(ip1, false, a); });
}

BubblePoly slide_convert(const BubblePoly& p, int i, int n, SlideDirection dir) {
  int ip1 = nxt(i, n);
  BubblePoly yi = y_poly(i, i, n);
  BubblePoly zip1 = z_poly(ip1, i, n);

  // Image of one head symbol under the ring map underlying the slide.
  auto head_image = [&](int a) {
    BubblePoly e;
    if (dir == SlideDirection::ToY) {
      for (int j = 0; j <= a; ++j)
        e = e + BubblePoly(binomial(a, j)) * BubblePoly::sym(ip1, false, a - j) * yi.pow(j);
    } else {
      for (int j = 0; j <= a; ++j)
        e = e + BubblePoly(binomial(a, j)) * BubblePoly::sym(i, true, a - j) * zip1.pow(j);
    }
    return -e;
  };

  BubblePoly hom;
  for (const auto& [m, c] : p.terms()) {
    BubblePoly prod(c);
    for (const auto& [s, e] : m) {
      BubblePoly img;
      if (dir == SlideDirection::ToY) {
        if (s.cw && s.color == i)
          img = head_image(s.offset);
        else if (!s.cw && s.color != i && s.offset == 1)
          img = -BubblePoly::sym(nxt(s.color, n), true, 1);
        else
          throw UnsupportedSymbol("slide_convert ToY: " + s.str());
      } else {
        if (!s.cw && s.color == ip1)
          img = head_image(s.offset);
        else if (s.cw && s.color != ip1 && s.offset == 1)
          img = -BubblePoly::sym(prv(s.color, n), false, 1);
        else
          throw UnsupportedSymbol("slide_convert ToZ: " + s.str());
      }
      prod = prod * img.pow(e);
    }
    hom = hom + prod;
  }
  return -hom;
}

}  // namespace qschur
