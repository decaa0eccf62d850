#include "qschur/tensorrep.hpp"

#include <algorithm>
#include <string>

#include "qschur/errors.hpp"
#include "qschur/qcombinat.hpp"

namespace qschur {

std::uint64_t RepConfig::encode(std::span<const long> tuple) const {
  std::uint64_t idx = 0;
  std::uint64_t w = (std::uint64_t)width();
  for (int j = r - 1; j >= 0; --j) idx = idx * w + (std::uint64_t)(tuple[j] - lo);
  return idx;
}

std::vector<long> RepConfig::decode(std::uint64_t idx) const {
  std::vector<long> tuple(r);
  std::uint64_t w = (std::uint64_t)width();
  for (int j = 0; j < r; ++j) {
    tuple[j] = lo + (long)(idx % w);
    idx /= w;
  }
  return tuple;
}

TensorState basis_state(const RepConfig& cfg, std::span<const long> tuple) {
  for (long t : tuple)
    if (t < cfg.lo || t > cfg.hi)
      throw WindowOverflow("basis index " + std::to_string(t) + " outside window");
  return {{cfg.encode(tuple), Laurent(1)}};
}

namespace {

void add_amp(TensorState& s, std::uint64_t idx, const Laurent& a) {
  auto it = s.find(idx);
  if (it == s.end()) {
    if (!a.is_zero()) s.emplace(idx, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) s.erase(it);
}

// E_{+i}: on a pure tensor, lower one leg t_k -> t_k - 1 where
// residue(t_k - 1) = i, weighted q^{+-1} by the i / i+1 residues of the legs
// to its right.
TensorState act_eplus(const RepConfig& cfg, int i, const TensorState& s) {
  TensorState out;
  int ip1 = next_color({i}, cfg.n).index;
  for (const auto& [idx, amp] : s) {
    std::vector<long> t = cfg.decode(idx);
    for (int k = 0; k < cfg.r; ++k) {
      if (residue(t[k] - 1, cfg.n).index != i) continue;
      long twist = 0;
      for (int j = k + 1; j < cfg.r; ++j) {
        int res = residue(t[j], cfg.n).index;
        if (res == i) twist += 1;
        else if (res == ip1) twist -= 1;
      }
      long nt = t[k] - 1;
      if (nt < cfg.lo)
        throw WindowOverflow("E_" + std::to_string(i) + " steps below window");
      std::vector<long> u = t;
      u[k] = nt;
      add_amp(out, cfg.encode(u), amp * Laurent::q(twist));
    }
  }
  return out;
}

// E_{-i}: raise one leg t_k -> t_k + 1 where residue(t_k) = i, weighted by
// the legs to its left with the opposite q-powers.
TensorState act_eminus(const RepConfig& cfg, int i, const TensorState& s) {
  TensorState out;
  int ip1 = next_color({i}, cfg.n).index;
  for (const auto& [idx, amp] : s) {
    std::vector<long> t = cfg.decode(idx);
    for (int k = 0; k < cfg.r; ++k) {
      if (residue(t[k], cfg.n).index != i) continue;
      long twist = 0;
      for (int j = 0; j < k; ++j) {
        int res = residue(t[j], cfg.n).index;
        if (res == i) twist -= 1;
        else if (res == ip1) twist += 1;
      }
      long nt = t[k] + 1;
      if (nt > cfg.hi)
        throw WindowOverflow("E_-" + std::to_string(i) + " steps above window");
      std::vector<long> u = t;
      u[k] = nt;
      add_amp(out, cfg.encode(u), amp * Laurent::q(twist));
    }
  }
  return out;
}

TensorState act_idem(const RepConfig& cfg, const Composition& lam, const TensorState& s) {
  TensorState out;
  for (const auto& [idx, amp] : s) {
    std::vector<long> t = cfg.decode(idx);
    if (weight_of(t, cfg.n) == lam) out.emplace(idx, amp);
  }
  return out;
}

TensorState act_shift(const RepConfig& cfg, long step, const TensorState& s) {
  TensorState out;
  for (const auto& [idx, amp] : s) {
    std::vector<long> t = cfg.decode(idx);
    for (long& x : t) {
      x += step;
      if (x < cfg.lo || x > cfg.hi) throw WindowOverflow("R-shift leaves window");
    }
    add_amp(out, cfg.encode(t), amp);
  }
  return out;
}

TensorState project_units(const RepConfig& cfg, const TensorState& s) {
  if (cfg.r != cfg.n) return {};
  return act_idem(cfg, Composition(std::vector<int>(cfg.n, 1)), s);
}

TensorState act_divided(const RepConfig& cfg, int sign, int i, int a, const TensorState& s) {
  TensorState t = s;
  for (int k = 0; k < a; ++k)
    t = sign > 0 ? act_eplus(cfg, i, t) : act_eminus(cfg, i, t);
  Laurent fact = quantum_factorial(a);
  TensorState out;
  for (const auto& [idx, amp] : t) out.emplace(idx, exact_divide(amp, fact));
  return out;
}

}  // namespace

TensorState apply_generator(const RepConfig& cfg, const Generator& g, const TensorState& s) {
  using K = Generator::Kind;
  switch (g.kind) {
    case K::EPlus:
      return act_eplus(cfg, g.color, s);
    case K::EMinus:
      return act_eminus(cfg, g.color, s);
    case K::Idem:
      return act_idem(cfg, g.idem, s);
    case K::RShiftPlus:
      return act_shift(cfg, +1, s);
    case K::RShiftMinus:
      return act_shift(cfg, -1, s);
    case K::EDeltaPlus:
      return act_shift(cfg, -1, project_units(cfg, s));
    case K::EDeltaMinus:
      return act_shift(cfg, +1, project_units(cfg, s));
    case K::DivPlus:
      return act_divided(cfg, +1, g.color, g.power, s);
    case K::DivMinus:
      return act_divided(cfg, -1, g.color, g.power, s);
  }
  return {};
}

TensorState apply_word(const RepConfig& cfg, const Word& w, const TensorState& s) {
  TensorState t = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) t = apply_generator(cfg, *it, t);
  return t;
}

std::map<std::uint64_t, RatFunc> apply_element(const RepConfig& cfg, const Element& e,
                                               const TensorState& s) {
  std::map<std::uint64_t, RatFunc> out;
  for (const auto& [w, c] : e.terms()) {
    TensorState t = apply_word(cfg, w, s);
    for (const auto& [idx, amp] : t) {
      RatFunc v = c * RatFunc(amp);
      auto it = out.find(idx);
      if (it == out.end())
        out.emplace(idx, v);
      else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

std::vector<std::vector<long>> safe_basis(const RepConfig& cfg, const Composition& lam,
                                          int margin) {
  long lo = cfg.lo + margin, hi = cfg.hi - margin;
  if (lo > hi)
    throw EmptySafeInterior("margin " + std::to_string(margin) + " exhausts window [" +
                            std::to_string(cfg.lo) + "," + std::to_string(cfg.hi) + "]");
  std::vector<std::vector<long>> out;
  std::vector<long> t(cfg.r, lo);
  while (true) {
    if (weight_of(t, cfg.n) == lam) out.push_back(t);
    int j = cfg.r - 1;
    while (j >= 0 && t[j] == hi) t[j--] = lo;
    if (j < 0) break;
    ++t[j];
  }
  return out;
}

std::string tuple_str(std::span<const long> tuple) {
  std::string s = "(";
  for (size_t j = 0; j < tuple.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(tuple[j]);
  }
  return s + ")";
}

}  // namespace qschur
