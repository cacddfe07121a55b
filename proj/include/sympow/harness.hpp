#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sympow/ideal.hpp"

namespace sympow {

enum class CheckKind { SP1, SP2, ID1, ID2, WeakID2 };
enum class Status { Verified, Counterexample, PreconditionFailed, Vacuous };

std::string to_string(CheckKind kind);
std::string to_string(Status status);
CheckKind parse_check_kind(const std::string& text);
Status parse_status(const std::string& text);

/// CLI exit code for a verdict: 0 verified, 2 counterexample, 3 otherwise.
int exit_code(Status status);

const std::string& toolkit_version();

/// Ring, two asserted primes, a candidate element and exponents. In ID mode
/// f is the hypersurface equation and p, q are ideals of the relation-free
/// ambient ring containing it.
struct ConjectureInstance {
  Ring ring;
  Ideal p;
  Ideal q;
  Polynomial f;
  unsigned m = 1;
  unsigned n = 1;
  CheckKind check = CheckKind::SP1;
  std::optional<Polynomial> separator;
  std::optional<std::uint64_t> seed;
};

using Quantity = std::variant<std::int64_t, bool>;

struct Report {
  Status status = Status::PreconditionFailed;
  std::vector<std::pair<std::string, Quantity>> quantities;
  /// name -> polynomial text accepted by parse_poly
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::string> assumptions;
  std::optional<std::uint64_t> seed;
  std::string toolkit_version = sympow::toolkit_version();

  void set(const std::string& name, Quantity value);
  const Quantity* get(const std::string& name) const;
  const std::string* witness(const std::string& name) const;
  bool operator==(const Report&) const = default;
};

/// SP-1 / SP-2 on a relation-free ring: preconditions sqrt(p+q) = m and
/// dim R/p + dim R/q = dim R, hypothesis f in p^(m) and f in q (SP-1) or
/// q^(n) (SP-2), conclusion f in m^(m+n) with n = 1 for SP-1.
Report check_sp(const ConjectureInstance& inst);

/// ID-1 / ID-2 / the weak ID-2 bound on the hypersurface R/(f).
Report check_id(const ConjectureInstance& inst);

/// Dispatches on inst.check.
Report check(const ConjectureInstance& inst);

/// Checks independent instances concurrently; output order matches input.
std::vector<Report> check_batch(const std::vector<ConjectureInstance>& instances);

/// The hypersurface xy(z+u) - u^s z over F_char with p = (x,u), q = (y,z),
/// m = 2q/(s-1) + 1: x^m y lies in p^(ms) and q but c * x^m y is outside
/// m^(ms+1) for c = (xy - u^s)^q. Requires s >= 3 and (s-1) | 2q.
Report kr_example(unsigned s, unsigned q, std::uint32_t characteristic);

struct FamilyParams {
  std::size_t nvars = 4;
  std::size_t split = 2;
  std::size_t overlap = 0;  // coordinate-hypersurface: variables shared by p and q
  unsigned m = 2;
  unsigned n = 2;
  std::uint32_t characteristic = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::optional<CheckKind> check;
  unsigned terms = 3;
  unsigned extra_degree = 1;
  unsigned s = 3;  // kurano-roberts
  unsigned q = 2;
};

/// "coordinate", "coordinate-hypersurface", "monomial-curve-345", "kurano-roberts".
std::vector<ConjectureInstance> gen_family(const std::string& name, const FamilyParams& params);

/// (x^3 - yz, y^2 - xz, z^2 - x^2 y), the prime of the curve (t^3, t^4, t^5),
/// in k[x,y,z].
Ideal monomial_curve_345(const Ring& ring);

}  // namespace sympow
