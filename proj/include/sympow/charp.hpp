#pragma once

#include <string>
#include <variant>

#include "sympow/ideal.hpp"

namespace sympow {

/// f^(p^e) in characteristic p: every exponent scaled by p^e, coefficients
/// fixed (c^p = c in F_p).
Polynomial frobenius(const Polynomial& f, unsigned e);

/// I^[p^e]: generators raised to the p^e-th power. The ring relation, when
/// present, stays unraised.
Ideal frobenius_power(const Ideal& ideal, unsigned e);

/// Partial derivatives of the ring relation, as an ideal of the quotient.
Ideal jacobian_ideal(const Ring& ring);

struct NotInTightClosure {
  unsigned failing_e = 0;
  /// Normal form of c * z^(p^e) modulo I^[p^e]; nonzero.
  Polynomial certificate;
};

struct ConsistentUpTo {
  unsigned E = 0;
};

struct TCProbeResult {
  std::variant<NotInTightClosure, ConsistentUpTo> outcome;
  /// The conclusion is conditional on c being a test element.
  std::string assumption;

  bool not_in_tight_closure() const { return std::holds_alternative<NotInTightClosure>(outcome); }
};

/// Tests c * z^(p^e) in I^[p^e] for e = 0..E in order and stops at the first
/// failure. Assumes, without checking, that c is a test element.
TCProbeResult tc_nonmembership_probe(const Polynomial& z, const Ideal& ideal, const Polynomial& c, unsigned E = 2);

}  // namespace sympow
