#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sympow/ideal.hpp"
#include "sympow/ring.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline sympow::Ring ring_of(std::size_t nvars, std::uint32_t characteristic) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w", "a", "b"};
  std::vector<std::string> vars(names, names + nvars);
  return sympow::RingSpec::create(vars, sympow::Field::of_characteristic(characteristic));
}

inline sympow::Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::vector<std::uint32_t> e(nvars, 0);
  const unsigned d = deg(rng);
  for (unsigned i = 0; i < d; ++i) ++e[var(rng)];
  return sympow::Monomial(std::span<const std::uint32_t>(e));
}

inline sympow::Polynomial random_poly(Rng& rng, const sympow::Ring& ring, unsigned terms, unsigned max_degree,
                                      int coeff_bound = 9) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::vector<sympow::Term> ts;
  for (unsigned i = 0; i < terms; ++i)
    ts.push_back({sympow::FieldScalar::from_int(coeff(rng), ring->field()),
                  random_monomial(rng, ring->nvars(), max_degree)});
  return sympow::Polynomial(ring, ts);
}

inline sympow::Polynomial random_nonzero_poly(Rng& rng, const sympow::Ring& ring, unsigned terms, unsigned max_degree) {
  for (;;) {
    auto f = random_poly(rng, ring, terms, max_degree);
    if (!f.is_zero()) return f;
  }
}

inline sympow::Polynomial random_homogeneous(Rng& rng, const sympow::Ring& ring, unsigned terms, unsigned degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  for (;;) {
    std::vector<sympow::Term> ts;
    for (unsigned i = 0; i < terms; ++i) {
      std::vector<std::uint32_t> e(ring->nvars(), 0);
      for (unsigned k = 0; k < degree; ++k) ++e[var(rng)];
      ts.push_back({sympow::FieldScalar::from_int(coeff(rng), ring->field()),
                    sympow::Monomial(std::span<const std::uint32_t>(e))});
    }
    sympow::Polynomial f(ring, ts);
    if (!f.is_zero()) return f;
  }
}

/// Random monomial ideal with 1..max_gens generators of degree 1..max_degree.
inline oracle::MonomialIdeal random_monomial_ideal(Rng& rng, std::size_t nvars, unsigned max_gens,
                                                   unsigned max_degree) {
  std::uniform_int_distribution<unsigned> count(1, max_gens);
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  oracle::MonomialIdeal out;
  const unsigned n = count(rng);
  for (unsigned i = 0; i < n; ++i) {
    oracle::Exps e(nvars, 0);
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) ++e[var(rng)];
    out.push_back(e);
  }
  return out;
}

inline sympow::Ideal to_ideal(const oracle::MonomialIdeal& gens, const sympow::Ring& ring) {
  std::vector<sympow::Polynomial> polys;
  for (const auto& e : gens)
    polys.push_back(sympow::Polynomial::monomial(ring, sympow::Monomial(std::span<const std::uint32_t>(e))));
  return sympow::Ideal(ring, polys);
}

/// Exponent vectors of an ideal whose generators are all monomials.
inline oracle::MonomialIdeal exponents_of(const std::vector<sympow::Polynomial>& polys) {
  oracle::MonomialIdeal out;
  for (const auto& p : polys) {
    oracle::Exps e(p.lead_monomial().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = p.lead_monomial()[i];
    out.push_back(e);
  }
  return oracle::minimalize(out);
}

inline bool all_monomials(const std::vector<sympow::Polynomial>& polys) {
  for (const auto& p : polys)
    if (!p.is_monomial()) return false;
  return true;
}

}  // namespace testgen
