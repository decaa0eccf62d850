#pragma once

#include "qschur/laurent.hpp"

namespace qschur {

// [a] = q^{a-1} + q^{a-3} + ... + q^{1-a}; [-a] = -[a], [0] = 0.
Laurent quantum_int(long a);

// [a]! = [1][2]...[a]; rejects a < 0.
Laurent quantum_factorial(long a);

// [a choose b] = [a][a-1]...[a-b+1] / [b]!, valid for any integer a, b >= 0.
Laurent quantum_binomial(long a, long b);

// Classical binomial coefficient (used by the bubble closed forms).
Int binomial(long n, long k);

}  // namespace qschur
