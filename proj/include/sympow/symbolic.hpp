#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "sympow/ideal.hpp"

namespace sympow {

/// An ideal the caller asserts is prime. Primality is not verified;
/// properness is.
class AssertedPrime {
 public:
  explicit AssertedPrime(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  const Ring& ring() const { return ideal_.ring(); }
  bool contains(const Polynomial& f) const { return ideal_.contains(f); }

 private:
  Ideal ideal_;
};

/// Ordinary powers p, p^2, ... built incrementally as p^(k+1) = p^k * p.
class PowerLadder {
 public:
  explicit PowerLadder(Ideal base) : base_(std::move(base)) {}
  const Ideal& power(unsigned m);
  const Ideal& base() const { return base_; }

 private:
  Ideal base_;
  std::deque<Ideal> powers_;
};

struct SymbolicMembership {
  Polynomial element;
  unsigned exponent = 0;
  bool verdict = false;
  /// s with s*f in p^m and s not in p; present iff verdict.
  std::optional<Polynomial> witness;
};

/// f in p^(m): some generator s of (p^m : f) lies outside p. The witness is
/// the first reduced-basis generator of the colon ideal not in p (1 when f
/// is already in p^m).
SymbolicMembership symbolic_member(const Polynomial& f, const AssertedPrime& p, unsigned m);
SymbolicMembership symbolic_member(const Polynomial& f, const AssertedPrime& p, unsigned m, PowerLadder& powers);

/// Largest m with f in p^(m), 0 when f is not in p. Throws CapExceeded when
/// f is still a member at cap + 1.
unsigned symbolic_order(const Polynomial& f, const AssertedPrime& p);
unsigned symbolic_order(const Polynomial& f, const AssertedPrime& p, unsigned cap);

struct SymbolicPowerCandidate {
  Ideal ideal;
  /// Every generator passed symbolic_member at the requested exponent.
  bool verified_sound = false;
};

/// (p^m : s^infinity). Always inside p^(m); equal to it when s avoids every
/// embedded prime of p^m, which is not checked.
SymbolicPowerCandidate symbolic_power_candidate(const AssertedPrime& p, unsigned m, const Polynomial& separator);

/// Smallest total degree of a term of f (multiplicity of k[x]/(f) at the
/// origin). Relation-free rings only.
unsigned order_at_origin(const Polynomial& f);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[x_1..x_n]/(gens).
std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars);
/// Number of standard monomials of degree k, from the numerator.
mpz_class hilbert_function(std::span<const mpz_class> numerator, std::size_t nvars, unsigned k);

/// e(R/I) at the irrelevant ideal for homogeneous I in a relation-free ring:
/// d! times the leading coefficient of the Hilbert-Samuel polynomial, with
/// d = krull_dim(I). Detected by stabilized finite differences; throws
/// CapExceeded past limits().hilbert_degree_cap.
unsigned hilbert_samuel_multiplicity(const Ideal& ideal);

struct HypersurfaceMultiplicities {
  unsigned e_A = 0;   // e(A), A = R/(f)
  unsigned e_AP = 0;  // e(A_P) = symbolic order of f along p
  unsigned e_AQ = 0;  // e(A_Q)
};

/// (order_at_origin(f), symbolic_order(f, p), symbolic_order(f, q)); f must lie in p and q.
HypersurfaceMultiplicities hypersurface_mults(const Polynomial& f, const AssertedPrime& p, const AssertedPrime& q);

}  // namespace sympow
