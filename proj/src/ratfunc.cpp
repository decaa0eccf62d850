#include "qschur/ratfunc.hpp"

#include <stdexcept>

#include "qschur/errors.hpp"

namespace qschur {

RatFunc::RatFunc(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  Laurent g = Laurent::gcd(num_, den_);
  num_ = exact_divide(num_, g);
  den_ = exact_divide(den_, g);
  // Fix the unit: denominator has min exponent 0 and positive leading coefficient.
  Laurent unit = Laurent::monomial(den_.terms().rbegin()->second < 0 ? Int(-1) : Int(1),
                                   den_.min_exp());
  num_ = exact_divide(num_, unit);
  den_ = exact_divide(den_, unit);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

bool RatFunc::operator<(const RatFunc& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qschur
