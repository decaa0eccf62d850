#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qschur {

// A color is an index in 1..n; all arithmetic on colors wraps mod n back
// into that range so the cyclic subscript convention cannot be dropped.
struct Color {
  int index;  // 1..n

  bool operator==(const Color&) const = default;
  auto operator<=>(const Color&) const = default;
};

inline Color next_color(Color c, int n) { return {c.index % n + 1}; }
inline Color prev_color(Color c, int n) { return {(c.index + n - 2) % n + 1}; }

// Unique i in 1..n with i == t (mod n).
Color residue(long t, int n);

// gl_n weight: an integer n-tuple.
using Weight = std::vector<int>;

// Simple root alpha_i = eps_i - eps_{i+1 mod n}.
Weight root(Color i, int n);

// (lambda_n, lambda_1, ..., lambda_{n-1}).
Weight rotate(const Weight& lam);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);

// Member of Lambda(n,r): nonnegative n-tuple summing to r.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int rank() const { return (int)entries_.size(); }
  int weight_sum() const { return r_; }
  int operator[](int i) const { return entries_[i]; }  // 0-based

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;

  std::string str() const;

 private:
  std::vector<int> entries_;
  int r_ = 0;
};

// Is w a valid member of Lambda(n,r)?
bool in_lambda(const Weight& w, int n, int r);

// Weight of a pure tensor e_{t_1} x ... x e_{t_r}: sum of eps_{residue(t_j)}.
Composition weight_of(std::span<const long> tuple, int n);

// phi_{n,r}: solves lambda_i - lambda_{i+1} = mu_i, sum lambda_i = r over the
// integers; nullopt when no integral solution exists.
std::optional<Weight> phi(std::span<const int> mu, int n, int r);

// All of Lambda(n,r) in lexicographic order.
std::vector<Composition> enumerate_compositions(int n, int r);

std::string weight_str(const Weight& w);

}  // namespace qschur
