#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sympow/monomial.hpp"
#include "sympow/ring.hpp"
#include "sympow/term.hpp"

namespace sympow {

/// A polynomial in canonical form: terms strictly decreasing in `order()`,
/// no zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Ring ring, std::vector<Term> terms, MonomialOrder order = MonomialOrder::degrevlex());

  static Polynomial zero(Ring ring, MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial constant(Ring ring, const FieldScalar& c, MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial constant(Ring ring, long long c, MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial variable(Ring ring, std::size_t index, MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial monomial(Ring ring, const Monomial& m, MonomialOrder order = MonomialOrder::degrevlex());

  /// Wraps terms already in canonical form for `order`, skipping the sort.
  static Polynomial from_sorted(Ring ring, std::vector<Term> terms, MonomialOrder order);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  Field field() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& lead_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const FieldScalar& lead_coeff() const { return terms_.front().coeff; }

  std::uint32_t total_degree() const;
  /// Smallest total degree of a term; precondition: nonzero.
  std::uint32_t min_degree() const;
  /// Every term has the same total degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  Polynomial with_order(const MonomialOrder& order) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const FieldScalar& c) const;
  Polynomial mul_term(const FieldScalar& c, const Monomial& m) const;
  Polynomial pow(unsigned k) const;
  /// Divides through by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Over Q: integer coefficients with content 1 and positive leading
  /// coefficient. Over F_p: monic.
  Polynomial primitive() const;
  /// Formal partial derivative in variable `index`.
  Polynomial derivative(std::size_t index) const;

  /// Reinterprets in `target`, which must have the same variables and field.
  Polynomial rebase(const Ring& target) const;
  /// Maps into `target`, whose variable list is `count` new variables
  /// followed by this ring's variables.
  Polynomial shifted_into(const Ring& target, std::size_t count) const;
  /// Inverse of shifted_into; precondition: the first `count` variables do
  /// not occur.
  Polynomial dropped_into(const Ring& target, std::size_t count) const;
  bool involves_first(std::size_t count) const;

  /// Same ring and same terms after bringing both to one order.
  bool operator==(const Polynomial& o) const;

  /// Human-readable form; over Q may contain fractions like "1/2*y^2".
  std::string to_string() const;

 private:
  void canonicalize();
  void check_compatible(const Polynomial& o) const;

  Ring ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Merge of two canonical term lists: a + c*b, in `order`.
std::vector<Term> add_scaled(std::span<const Term> a, std::span<const Term> b, const FieldScalar& c,
                             const Monomial* shift, const MonomialOrder& order);

}  // namespace sympow
