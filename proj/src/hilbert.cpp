#include <algorithm>
#include <bit>

#include "sympow/errors.hpp"
#include "sympow/limits.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

namespace {

using Series = std::vector<mpz_class>;

Series multiply(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Series add_shifted(Series a, const Series& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); })) out.push_back(g);
  return out;
}

// Numerator of the Hilbert series of k[x]/(gens) via pivoting on a single
// variable: N(I) = N(I + (x)) + t * N(I : x).
Series numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  const Monomial* mixed = nullptr;
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    Series acc{1};
    for (const auto& g : gens) {
      Series factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] -= 1;
      acc = multiply(acc, factor);
    }
    return acc;
  }
  for (const auto& g : gens)
    if (std::popcount(g.support()) >= 2) {
      mixed = &g;
      break;
    }
  // pick the variable of `mixed` occurring in the most generators
  std::size_t pivot = 0, best = 0;
  for (std::size_t v = 0; v < mixed->size(); ++v) {
    if ((*mixed)[v] == 0) continue;
    std::size_t count = 0;
    for (const auto& g : gens) count += g[v] ? 1 : 0;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  const Monomial x = Monomial::variable(mixed->size(), pivot);
  std::vector<Monomial> with_x = gens, quotient;
  with_x.push_back(x);
  for (const auto& g : gens) quotient.push_back(g[pivot] ? g / x : g);
  return add_shifted(numerator(std::move(with_x)), numerator(std::move(quotient)), 1);
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw UsageError("hilbert_numerator: monomial arity mismatch");
  Series s = numerator(std::vector<Monomial>(generators.begin(), generators.end()));
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

mpz_class hilbert_function(std::span<const mpz_class> numerator, std::size_t nvars, unsigned k) {
  mpz_class total = 0;
  for (std::size_t j = 0; j < numerator.size() && j <= k; ++j) {
    if (nvars == 0) {
      if (j == k) total += numerator[j];
      continue;
    }
    total += numerator[j] * binomial(static_cast<long>(k - j + nvars - 1), static_cast<long>(nvars - 1));
  }
  return total;
}

unsigned hilbert_samuel_multiplicity(const Ideal& ideal) {
  if (ideal.ring()->has_relation()) throw UsageError("hilbert_samuel_multiplicity: fold the relation into the ideal");
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw UsageError("hilbert_samuel_multiplicity: generators must be homogeneous");
  const unsigned d = krull_dim(ideal);
  const std::size_t n = ideal.ring()->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : ideal.basis().generators()) leads.push_back(g.lead_monomial());
  const std::vector<mpz_class> num = hilbert_numerator(leads, n);

  const unsigned cap = limits().hilbert_degree_cap;
  const unsigned window = d + 4;
  std::vector<mpz_class> samuel;  // samuel[k] = length of R/(I + m^(k+1))
  mpz_class running = 0;
  std::optional<mpz_class> value;
  unsigned stable = 0;
  for (unsigned k = 0; k <= cap; ++k) {
    running += hilbert_function(num, n, k);
    samuel.push_back(running);
    if (k < d) continue;
    mpz_class diff = 0;  // d-th backward difference at k
    for (unsigned i = 0; i <= d; ++i) {
      const mpz_class term = binomial(d, i) * samuel[k - i];
      if (i % 2) diff -= term;
      else diff += term;
    }
    if (value && *value == diff) {
      if (++stable >= window) {
        if (diff <= 0) throw InternalError("hilbert_samuel_multiplicity: non-positive multiplicity");
        return static_cast<unsigned>(diff.get_ui());
      }
    } else {
      value = diff;
      stable = 1;
    }
  }
  throw CapExceeded("hilbert degree cap", "no stabilization by degree " + std::to_string(cap));
}

}  // namespace sympow
