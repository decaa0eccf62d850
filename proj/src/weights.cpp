#include "qschur/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

Color residue(long t, int n) {
  long m = t % n;
  if (m <= 0) m += n;
  return Color{(int)m};
}

Weight root(Color i, int n) {
  Weight w(n, 0);
  w[i.index - 1] += 1;
  w[next_color(i, n).index - 1] -= 1;
  return w;
}

Weight rotate(const Weight& lam) {
  Weight w(lam.size());
  w[0] = lam.back();
  for (size_t i = 1; i < lam.size(); ++i) w[i] = lam[i - 1];
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  Weight w(a);
  for (size_t i = 0; i < w.size(); ++i) w[i] += b[i];
  return w;
}

Weight sub(const Weight& a, const Weight& b) {
  Weight w(a);
  for (size_t i = 0; i < w.size(); ++i) w[i] -= b[i];
  return w;
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("Composition: negative entry");
  r_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string Composition::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i];
  out << ")";
  return out.str();
}

bool in_lambda(const Weight& w, int n, int r) {
  if ((int)w.size() != n) return false;
  int sum = 0;
  for (int e : w) {
    if (e < 0) return false;
    sum += e;
  }
  return sum == r;
}

Composition weight_of(std::span<const long> tuple, int n) {
  std::vector<int> w(n, 0);
  for (long t : tuple) w[residue(t, n).index - 1] += 1;
  return Composition(std::move(w));
}

std::optional<Weight> phi(std::span<const int> mu, int n, int r) {
  // lambda_n is forced: n*lambda_n + sum_i i*mu_i = r.
  long shifted = r;
  for (int i = 0; i < n - 1; ++i) shifted -= (long)(i + 1) * mu[i];
  if (shifted % n != 0) return std::nullopt;
  Weight lam(n);
  lam[n - 1] = (int)(shifted / n);
  for (int i = n - 2; i >= 0; --i) lam[i] = lam[i + 1] + mu[i];
  return lam;
}

namespace {
void enumerate_rec(int n, int r, std::vector<int>& cur, std::vector<Composition>& out) {
  if ((int)cur.size() == n - 1) {
    cur.push_back(r);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= r; ++v) {
    cur.push_back(v);
    enumerate_rec(n, r - v, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Composition> enumerate_compositions(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("enumerate_compositions: bad arguments");
  std::vector<Composition> out;
  std::vector<int> cur;
  enumerate_rec(n, r, cur, out);
  return out;
}

std::string weight_str(const Weight& w) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ")";
  return out.str();
}

}  // namespace qschur
