#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qschur {

using Int = mpz_class;

// Laurent polynomial over Z[q,q^-1], stored sparsely as exponent -> coefficient.
// No zero coefficients are ever kept; arithmetic is exact.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) { set(0, Int(c)); }
  Laurent(const Int& c) { set(0, c); }

  static Laurent monomial(const Int& coeff, long exp);
  // q^e
  static Laurent q(long e = 1) { return monomial(1, e); }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;

  Int coeff(long exp) const;
  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero
  const std::map<long, Int>& terms() const { return coeff_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const { return coeff_ < o.coeff_; }

  // Substitution q -> q^-1.
  Laurent bar() const;

  // Exact quotient in Z[q,q^-1], or nullopt when d does not divide p.
  static std::optional<Laurent> try_divide(const Laurent& p, const Laurent& d);

  // gcd up to the canonical unit choice: min exponent 0, positive leading coefficient.
  static Laurent gcd(const Laurent& a, const Laurent& b);

  // Canonical rendering, monomials in decreasing exponent: "q^2 + 1 - q^-2".
  std::string str() const;
  // Inverse of str(); throws ParseError.
  static Laurent parse(std::string_view text);

 private:
  void set(long exp, const Int& c);
  std::map<long, Int> coeff_;
};

// exact_divide per the qarith contract: throws NotDivisible.
Laurent exact_divide(const Laurent& p, const Laurent& d);

}  // namespace qschur
