#include <algorithm>

#include "sympow/errors.hpp"
#include "sympow/groebner.hpp"
#include "sympow/limits.hpp"

namespace sympow {

GroebnerBasis buchberger_reference(std::span<const Polynomial> generators, const MonomialOrder& order) {
  Ring ring;
  std::vector<Polynomial> basis;
  for (auto& g : detail::prepare_generators(generators, order, ring)) basis.push_back(g.monic());
  std::vector<Polynomial> source(generators.begin(), generators.end());

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back(Pair{i, j, lcm(basis[i].lead_monomial(), basis[j].lead_monomial())});

  const std::size_t max_basis = limits().max_basis;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (auto c = compare(a.lcm, b.lcm, order); c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    const Pair pr = *best;
    pairs.erase(best);
    if (basis[pr.i].lead_monomial().coprime(basis[pr.j].lead_monomial())) continue;
    Polynomial r = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis, order).remainder;
    if (r.is_zero()) continue;
    if (basis.size() >= max_basis) throw CapExceeded("max basis size", std::to_string(max_basis) + " polynomials");
    basis.push_back(r.monic());
    const std::size_t n = basis.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
      pairs.push_back(Pair{i, n, lcm(basis[i].lead_monomial(), basis[n].lead_monomial())});
  }
  return GroebnerBasis(ring, order, detail::interreduce(std::move(basis), order), std::move(source));
}

}  // namespace sympow
