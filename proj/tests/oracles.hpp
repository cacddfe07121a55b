#pragma once

// Test-side oracles. None of these call the Groebner engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sympow/polynomial.hpp"

namespace oracle {

using Exps = std::vector<std::uint32_t>;
using MonomialIdeal = std::vector<Exps>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Minimal generators, sorted.
inline MonomialIdeal minimalize(MonomialIdeal gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

/// I cap J for monomial ideals: pairwise lcms.
inline MonomialIdeal lcm_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Exps l(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) l[i] = std::max(x[i], y[i]);
      out.push_back(l);
    }
  return minimalize(out);
}

/// (I : m) for a monomial ideal and a monomial: g / gcd(g, m).
inline MonomialIdeal monomial_colon(const MonomialIdeal& gens, const Exps& m) {
  MonomialIdeal out;
  for (const auto& g : gens) {
    Exps q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = g[i] > m[i] ? g[i] - m[i] : 0;
    out.push_back(q);
  }
  return minimalize(out);
}

/// dim k[x]/I for a monomial ideal: largest variable set containing no
/// generator's support, by trying every subset.
inline unsigned monomial_dimension(const MonomialIdeal& gens, std::size_t nvars) {
  unsigned best = 0;
  bool any = false;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nvars); ++s) {
    bool independent = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t i = 0; i < nvars; ++i)
        if (g[i] > 0 && !((s >> i) & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) {
      any = true;
      best = std::max<unsigned>(best, static_cast<unsigned>(__builtin_popcountll(s)));
    }
  }
  return any ? best : ~0u;
}

/// Number of monomials outside (x_1^a_1, ..., x_n^a_n)^k, by enumeration.
inline std::uint64_t standard_monomials_of_power(const std::vector<unsigned>& a, unsigned k) {
  std::uint64_t count = 0;
  std::vector<unsigned> e(a.size(), 0);
  for (;;) {
    unsigned blocks = 0;
    for (std::size_t i = 0; i < a.size(); ++i) blocks += e[i] / a[i];
    if (blocks < k) ++count;
    std::size_t i = 0;
    while (i < a.size() && ++e[i] == a[i] * k) e[i++] = 0;
    if (i == a.size()) break;
  }
  return count;
}

/// Multiplicity of (x_1^a_1..x_n^a_n) from lengths: len(R/I^k) / C(k+n-1, n),
/// which must be the same rational for every k checked.
inline std::optional<std::uint64_t> box_multiplicity(const std::vector<unsigned>& a, unsigned kmax = 4) {
  std::optional<std::uint64_t> e;
  const std::size_t n = a.size();
  for (unsigned k = 1; k <= kmax; ++k) {
    std::uint64_t binom = 1;
    for (std::size_t i = 1; i <= n; ++i) binom = binom * (k + i - 1) / i;
    const std::uint64_t len = standard_monomials_of_power(a, k);
    if (len % binom != 0) return std::nullopt;
    if (e && *e != len / binom) return std::nullopt;
    e = len / binom;
  }
  return e;
}

/// Image of f under x_i -> t^{w_i}, as exponent -> coefficient (zero
/// coefficients removed).
inline std::map<std::uint64_t, sympow::FieldScalar> substitute_powers(const sympow::Polynomial& f,
                                                                       const std::vector<std::uint64_t>& w) {
  std::map<std::uint64_t, sympow::FieldScalar> out;
  for (const auto& t : f.terms()) {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < w.size(); ++i) e += w[i] * t.mono[i];
    auto it = out.find(e);
    if (it == out.end()) out.emplace(e, t.coeff);
    else it->second += t.coeff;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// Value of f at a point of the coefficient field.
inline sympow::FieldScalar evaluate(const sympow::Polynomial& f, const std::vector<sympow::FieldScalar>& point) {
  auto acc = sympow::FieldScalar::zero(f.field());
  for (const auto& t : f.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) v *= point[i].pow(t.mono[i]);
    acc += v;
  }
  return acc;
}

inline std::vector<Exps> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Exps> out;
  Exps e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

/// Dense linear algebra: is f in the span of u*g, u a monomial of degree at
/// most `max_multiplier_degree`? A yes proves membership. When f and every g
/// are homogeneous for `weights` the search can be restricted to matching
/// weights, and a no is then a proof of non-membership once the multiplier
/// bound covers weight(f) - weight(g) for every g.
class SpanMembership {
 public:
  SpanMembership(const std::vector<sympow::Polynomial>& gens, unsigned max_multiplier_degree,
                 std::optional<std::vector<unsigned>> weights = std::nullopt,
                 std::optional<unsigned> target_weight = std::nullopt)
      : weights_(std::move(weights)) {
    if (gens.empty()) return;
    const auto& ring = gens.front().ring();
    for (const auto& u : monomials_up_to(ring->nvars(), max_multiplier_degree)) {
      const sympow::Monomial mono{std::span<const std::uint32_t>(u)};
      for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (weights_ && target_weight && weight(mono) + weight(g.lead_monomial()) != *target_weight) continue;
        insert(to_vector(g.mul_term(sympow::FieldScalar::one(g.field()), mono)));
      }
    }
  }

  bool contains(const sympow::Polynomial& f) const { return reduce(to_vector(f)).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  using Key = std::vector<std::uint32_t>;
  using Vec = std::map<Key, sympow::FieldScalar, std::greater<>>;

  unsigned weight(const sympow::Monomial& m) const {
    unsigned w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += (*weights_)[i] * m[i];
    return w;
  }

  static Vec to_vector(const sympow::Polynomial& f) {
    Vec v;
    for (const auto& t : f.terms()) {
      Key k(t.mono.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = t.mono[i];
      v.emplace(std::move(k), t.coeff);
    }
    return v;
  }

  // Rows have pivot coefficient 1 at their largest key, and subtracting one
  // only touches smaller keys, so one descending pass suffices.
  Vec reduce(Vec v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const auto factor = it->second;
      for (const auto& [k, c] : row->second) {
        if (k == it->first) continue;
        auto slot = v.find(k);
        if (slot == v.end()) {
          v.emplace(k, -(factor * c));
        } else {
          slot->second -= factor * c;
          if (slot->second.is_zero()) v.erase(slot);
        }
      }
      it = v.erase(it);
    }
    return v;
  }

  void insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const auto inv = v.begin()->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    rows_.emplace(v.begin()->first, std::move(v));
  }

  std::optional<std::vector<unsigned>> weights_;
  std::map<Key, Vec, std::greater<>> rows_;
};

}  // namespace oracle
