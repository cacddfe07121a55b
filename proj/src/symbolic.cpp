#include "sympow/symbolic.hpp"

#include "sympow/errors.hpp"
#include "sympow/limits.hpp"

namespace sympow {

AssertedPrime::AssertedPrime(Ideal ideal) : ideal_(std::move(ideal)) {
  if (ideal_.is_unit()) throw UsageError("asserted prime is the unit ideal");
  if (ideal_.ring()->has_relation()) {
    // checked in the ambient ring, where the relation is not adjoined for free
    const Ring ambient = ideal_.ring()->ambient();
    if (!ideal_.rebase(ambient).contains(ideal_.ring()->relation().rebase(ambient)))
      throw UsageError("asserted prime does not contain the ring relation");
  }
}

const Ideal& PowerLadder::power(unsigned m) {
  if (m == 0) throw UsageError("power exponent must be at least 1");
  if (powers_.empty()) powers_.push_back(base_);
  while (powers_.size() < m) {
    const Ideal next = powers_.back() * base_;
    powers_.push_back(Ideal(base_.ring(), interreduce_generators(next.generators())));
  }
  return powers_[m - 1];
}

SymbolicMembership symbolic_member(const Polynomial& f, const AssertedPrime& p, unsigned m) {
  PowerLadder powers(p.ideal());
  return symbolic_member(f, p, m, powers);
}

SymbolicMembership symbolic_member(const Polynomial& f, const AssertedPrime& p, unsigned m, PowerLadder& powers) {
  if (f.is_zero()) throw UsageError("symbolic_member: f must be nonzero");
  if (m == 0) throw UsageError("symbolic_member: exponent must be at least 1");
  if (!same_ring(f.ring(), p.ring())) throw UsageError("symbolic_member: ring mismatch");
  SymbolicMembership out{f, m, false, std::nullopt};
  const Ideal& pm = powers.power(m);
  if (pm.contains(f)) {
    out.verdict = true;
    out.witness = Polynomial::constant(f.ring(), 1);
    return out;
  }
  // the colon is {s : s f in p^m}; it escapes p iff one of its basis elements does
  if (!p.contains(f)) return out;
  const Ideal c = colon(pm, f);
  for (const auto& s : c.basis().generators()) {
    if (p.contains(s)) continue;
    if (!pm.contains(s * f)) throw InternalError("symbolic_member: colon generator fails s*f in p^m");
    out.verdict = true;
    out.witness = s.with_order(MonomialOrder::degrevlex());
    return out;
  }
  return out;
}

unsigned symbolic_order(const Polynomial& f, const AssertedPrime& p) {
  return symbolic_order(f, p, limits().symbolic_order_cap);
}

unsigned symbolic_order(const Polynomial& f, const AssertedPrime& p, unsigned cap) {
  if (f.is_zero()) throw UsageError("symbolic_order: f must be nonzero");
  if (cap == 0) throw UsageError("symbolic_order: cap must be at least 1");
  PowerLadder powers(p.ideal());
  for (unsigned m = 1; m <= cap + 1; ++m) {
    if (!symbolic_member(f, p, m, powers).verdict) return m - 1;
  }
  throw CapExceeded("symbolic order cap", "order exceeds " + std::to_string(cap));
}

SymbolicPowerCandidate symbolic_power_candidate(const AssertedPrime& p, unsigned m, const Polynomial& separator) {
  if (m == 0) throw UsageError("symbolic_power_candidate: exponent must be at least 1");
  if (p.contains(separator)) throw UsageError("symbolic_power_candidate: separator lies in p");
  PowerLadder powers(p.ideal());
  Ideal candidate = saturate(powers.power(m), separator);
  bool sound = true;
  for (const auto& g : candidate.generators())
    if (!symbolic_member(g, p, m, powers).verdict) sound = false;
  return SymbolicPowerCandidate{std::move(candidate), sound};
}

unsigned order_at_origin(const Polynomial& f) {
  if (f.is_zero()) throw UsageError("order_at_origin: zero polynomial");
  if (f.ring()->has_relation()) throw UsageError("order_at_origin: ring must be relation-free");
  return f.min_degree();
}

HypersurfaceMultiplicities hypersurface_mults(const Polynomial& f, const AssertedPrime& p, const AssertedPrime& q) {
  if (f.ring()->has_relation()) throw UsageError("hypersurface_mults: ambient ring must be relation-free");
  if (!p.contains(f) || !q.contains(f)) throw UsageError("hypersurface_mults: f must lie in both primes");
  return HypersurfaceMultiplicities{order_at_origin(f), symbolic_order(f, p), symbolic_order(f, q)};
}

}  // namespace sympow
