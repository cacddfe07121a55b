#include "sympow/charp.hpp"

#include "sympow/errors.hpp"
#include "sympow/parser.hpp"

namespace sympow {

namespace {

std::uint32_t frobenius_exponent(const Ring& ring, unsigned e) {
  const std::uint64_t p = ring->characteristic();
  if (p == 0) throw UsageError("Frobenius needs positive characteristic");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) throw CapExceeded("exponent", "p^e = " + std::to_string(q) + " above 65535");
  }
  return static_cast<std::uint32_t>(q);
}

}  // namespace

Polynomial frobenius(const Polynomial& f, unsigned e) {
  const std::uint32_t q = frobenius_exponent(f.ring(), e);
  if (q == 1) return f;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back(Term{t.coeff, t.mono.pow(q)});
  // raising to a power preserves the order of monomials
  return Polynomial::from_sorted(f.ring(), std::move(terms), f.order());
}

Ideal frobenius_power(const Ideal& ideal, unsigned e) {
  frobenius_exponent(ideal.ring(), e);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(frobenius(g, e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal jacobian_ideal(const Ring& ring) {
  if (!ring->has_relation()) throw UsageError("jacobian_ideal: ring has no relation");
  const Polynomial rel = ring->relation();
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < ring->nvars(); ++i) partials.push_back(rel.derivative(i));
  return Ideal(ring, std::move(partials));
}

TCProbeResult tc_nonmembership_probe(const Polynomial& z, const Ideal& ideal, const Polynomial& c, unsigned E) {
  if (!same_ring(z.ring(), ideal.ring()) || !same_ring(c.ring(), ideal.ring()))
    throw UsageError("tc probe: ring mismatch");
  if (ideal.ring()->characteristic() == 0) throw UsageError("tc probe: needs positive characteristic");
  if (c.is_zero()) throw UsageError("tc probe: c must be nonzero");
  TCProbeResult result{ConsistentUpTo{E},
                       "c = " + to_input_string(c) + " is assumed to be a test element (not verified)"};
  for (unsigned e = 0; e <= E; ++e) {
    Polynomial cz;
    Ideal bracket = ideal;
    try {
      cz = c * frobenius(z, e);
      bracket = frobenius_power(ideal, e);
    } catch (const CapExceeded& ex) {
      throw CapExceeded(ex.cap(), std::string(ex.what()) + "; last completed e = " +
                                      (e == 0 ? std::string("none") : std::to_string(e - 1)));
    }
    Polynomial nf;
    try {
      nf = bracket.basis().reduce(cz);
    } catch (const CapExceeded& ex) {
      throw CapExceeded(ex.cap(), std::string(ex.what()) + "; last completed e = " +
                                      (e == 0 ? std::string("none") : std::to_string(e - 1)));
    }
    if (!nf.is_zero()) {
      result.outcome = NotInTightClosure{e, nf.with_order(MonomialOrder::degrevlex())};
      return result;
    }
  }
  return result;
}

}  // namespace sympow
