#pragma once

#include <string>

#include "qschur/laurent.hpp"

namespace qschur {

// Element of Q(q) held as a normalized fraction of Laurent polynomials.
// Denominators only ever enter through divided powers (1/[a]!); everything
// else in the system stays polynomial.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Laurent& p) : num_(p), den_(1) {}
  RatFunc(const Laurent& num, const Laurent& den);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc inverse() const;  // requires nonzero
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  // Exact equality; equivalent to cross-multiplication on the normal forms.
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const;

  std::string str() const;

 private:
  void normalize();
  Laurent num_, den_;
};

}  // namespace qschur
