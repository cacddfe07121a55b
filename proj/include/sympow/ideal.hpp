#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sympow/groebner.hpp"
#include "sympow/polynomial.hpp"

namespace sympow {

/// An ideal of a RingSpec (of the quotient, when the ring has a relation).
/// Immutable; reduced bases are computed lazily, once per order, and shared
/// by copies.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);
  /// The ideal of all variables.
  static Ideal maximal(Ring ring);
  /// Comma-separated generators, e.g. "x, u".
  static Ideal parse(const std::string& text, const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const GroebnerBasis& basis(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return basis().is_unit(); }
  bool is_zero() const { return basis().is_zero() || (gens_.empty() && !ring_->has_relation()); }

  /// Mutual containment.
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

  /// Same generators in another ring over the same variables and field.
  Ideal rebase(const Ring& target) const;

  std::string to_string() const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Drops generators lying in the ideal of the remaining ones.
std::vector<Polynomial> interreduce_generators(std::vector<Polynomial> generators);

/// Ideal generated by all m-fold products of generators, interreduced.
Ideal ideal_power(const Ideal& ideal, unsigned m);

/// I cap J by eliminating a tag variable from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : f) = (1/f) * (I cap (f)), computed in the relation-free ring with the
/// relation adjoined to I.
Ideal colon(const Ideal& ideal, const Polynomial& f);

/// (I : f^infinity) by iterated colon to stabilization.
Ideal saturate_by_iteration(const Ideal& ideal, const Polynomial& f);
/// (I : f^infinity) by eliminating t from I + (1 - t*f).
Ideal saturate_by_elimination(const Ideal& ideal, const Polynomial& f);
/// Both routes; throws InternalError if they disagree.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// f in sqrt(I): 1 in I + (1 - t*f).
bool radical_member(const Polynomial& f, const Ideal& ideal);

/// Krull dimension of ring/I (A/IA when the ring has a relation). Throws
/// NotProper when 1 is in I.
unsigned krull_dim(const Ideal& ideal);

/// sqrt(I) is the ideal of all variables, by radical membership of each.
bool is_radical_maximal(const Ideal& ideal);
/// Same question answered by krull_dim(I) == 0 (relation-free rings only,
/// and only meaningful for ideals contained in the maximal ideal).
bool is_radical_maximal_by_dimension(const Ideal& ideal);

/// Largest |S| such that no leading monomial has support inside S; the
/// OpenMP kernel behind krull_dim.
unsigned max_independent_set_size(std::span<const std::uint32_t> leading_supports, std::size_t nvars);
/// Serial reference for max_independent_set_size.
unsigned max_independent_set_size_serial(std::span<const std::uint32_t> leading_supports, std::size_t nvars);

}  // namespace sympow
