#include "qschur/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

void Laurent::set(long exp, const Int& c) {
  if (c == 0)
    coeff_.erase(exp);
  else
    coeff_[exp] = c;
}

Laurent Laurent::monomial(const Int& coeff, long exp) {
  Laurent p;
  p.set(exp, coeff);
  return p;
}

bool Laurent::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

Int Laurent::coeff(long exp) const {
  auto it = coeff_.find(exp);
  return it == coeff_.end() ? Int(0) : it->second;
}

long Laurent::min_exp() const { return coeff_.begin()->first; }
long Laurent::max_exp() const { return coeff_.rbegin()->first; }

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.coeff_) {
    auto it = coeff_.find(e);
    if (it == coeff_.end()) {
      coeff_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeff_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.coeff_) {
    auto it = coeff_.find(e);
    if (it == coeff_.end()) {
      coeff_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeff_.erase(it);
    }
  }
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : coeff_) r.coeff_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : coeff_)
    for (const auto& [e2, c2] : o.coeff_) {
      auto it = r.coeff_.find(e1 + e2);
      if (it == r.coeff_.end()) {
        r.coeff_.emplace(e1 + e2, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.coeff_.erase(it);
      }
    }
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : coeff_) r.coeff_.emplace(-e, c);
  return r;
}

std::optional<Laurent> Laurent::try_divide(const Laurent& p, const Laurent& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return Laurent();
  Laurent rem = p;
  Laurent quot;
  const long dtop = d.max_exp();
  const Int& dlead = d.coeff_.rbegin()->second;
  // Any true quotient has exponents >= p.min - d.min; going lower means the
  // division cannot close (Laurent exponents are unbounded below, so without
  // this bound a failing division would loop forever).
  const long qmin = p.min_exp() - d.min_exp();
  while (!rem.is_zero()) {
    long rtop = rem.max_exp();
    if (rtop - dtop < qmin) return std::nullopt;
    const Int& rlead = rem.coeff_.rbegin()->second;
    Int c;
    mpz_fdiv_qr(c.get_mpz_t(), Int().get_mpz_t(), rlead.get_mpz_t(), dlead.get_mpz_t());
    if (c * dlead != rlead) return std::nullopt;
    Laurent t = monomial(c, rtop - dtop);
    quot += t;
    rem -= t * d;
    if (!rem.is_zero() && rem.max_exp() >= rtop) return std::nullopt;
  }
  return quot;
}

Laurent exact_divide(const Laurent& p, const Laurent& d) {
  auto q = Laurent::try_divide(p, d);
  if (!q) throw NotDivisible("(" + p.str() + ") is not divisible by (" + d.str() + ")");
  return *q;
}

namespace {

// Content (gcd of coefficients), always >= 0.
Int content(const Laurent& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive part shifted so min exponent is 0 and leading coefficient positive.
Laurent primitive(const Laurent& p) {
  Int ct = content(p);
  if (p.terms().rbegin()->second < 0) ct = -ct;
  Laurent r;
  long lo = p.min_exp();
  for (const auto& [e, c] : p.terms()) r += Laurent::monomial(c / ct, e - lo);
  return r;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  if (a.is_zero()) return primitive(b) * Laurent(content(b));
  if (b.is_zero()) return primitive(a) * Laurent(content(a));
  Int ctg;
  mpz_gcd(ctg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  Laurent u = primitive(a), v = primitive(b);
  // Euclid with pseudo-remainders; degrees in this artifact stay tiny.
  while (!v.is_zero()) {
    long du = u.max_exp(), dv = v.max_exp();
    if (du < dv) {
      std::swap(u, v);
      continue;
    }
    // prem(u, v): scale u so the leading term cancels exactly.
    Laurent scaled = u * monomial(v.terms().rbegin()->second, 0);
    Laurent t = monomial(u.terms().rbegin()->second, du - dv) * v;
    Laurent rem = scaled - t;
    u = v;
    v = rem.is_zero() ? rem : primitive(rem);
  }
  return primitive(u) * Laurent(ctg);
}

std::string Laurent::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int ab = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << ab.get_str();
    } else {
      if (ab != 1) out << ab.get_str();
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Laurent Laurent::parse(std::string_view text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto parse_int = [&]() -> Int {
    size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    size_t digits = i;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
    if (i == digits) throw ParseError("expected integer", start);
    return Int(std::string(text.substr(start, i - start)));
  };
  Laurent result;
  skip();
  if (i >= text.size()) throw ParseError("empty polynomial", i);
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) {
      if (first) throw ParseError("expected term", i);
      break;
    }
    Int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    // term := int? ("q" ("^" int)?)?
    Int c = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      c = parse_int();
      have_coeff = true;
    }
    long e = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = (long)parse_int().get_si();
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or 'q'", i);
    }
    result += monomial(sign * c, e);
    first = false;
    skip();
    if (i >= text.size()) break;
    if (text[i] != '+' && text[i] != '-') throw ParseError("unexpected character", i);
  }
  return result;
}

}  // namespace qschur
