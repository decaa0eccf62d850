#include "qschur/qcombinat.hpp"

#include <stdexcept>

#include "qschur/errors.hpp"

namespace qschur {

Laurent quantum_int(long a) {
  if (a < 0) return -quantum_int(-a);
  Laurent r;
  for (long e = a - 1; e >= 1 - a; e -= 2) r += Laurent::q(e);
  return r;
}

Laurent quantum_factorial(long a) {
  if (a < 0) throw std::domain_error("quantum_factorial: negative argument");
  Laurent r(1);
  for (long k = 2; k <= a; ++k) r *= quantum_int(k);
  return r;
}

Laurent quantum_binomial(long a, long b) {
  if (b < 0) throw std::domain_error("quantum_binomial: negative lower index");
  Laurent num(1);
  for (long k = 0; k < b; ++k) num *= quantum_int(a - k);
  return exact_divide(num, quantum_factorial(b));
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

}  // namespace qschur
