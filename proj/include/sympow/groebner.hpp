#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow {

/// input = sum(quotients[i] * divisors[i]) + remainder, exactly.
struct DivisionCertificate {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. Divisors are tried in list order against the
/// leftmost (largest) reducible term; terms no divisor's leading monomial
/// divides move to the remainder.
DivisionCertificate normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Trie over leading monomials answering "smallest-index stored monomial
/// dividing m".
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t nvars = 0) : nvars_(nvars) { nodes_.push_back(Node{}); }
  void insert(const Monomial& m, std::uint32_t id);
  /// Returns UINT32_MAX when nothing divides m.
  std::uint32_t find(const Monomial& m) const;
  bool empty() const { return size_ == 0; }

 private:
  struct Node {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> children;  // exponent -> node
    std::uint32_t id = UINT32_MAX;
  };
  std::uint32_t find_from(std::uint32_t node, std::size_t depth, const Monomial& m) const;

  std::size_t nvars_;
  std::size_t size_ = 0;
  std::vector<Node> nodes_;
};

/// Reduced Groebner basis: monic, interreduced, sorted by increasing leading
/// monomial, hence unique for (ideal, order). When the ring carries a
/// relation, it is part of the ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> reduced, std::vector<Polynomial> source);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return basis_; }
  const std::vector<Polynomial>& source() const { return source_; }

  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  bool is_zero() const { return basis_.empty(); }

  /// Normal form (the unique remainder modulo this basis).
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<Polynomial> source_;
  DivisorIndex index_;
};

/// Buchberger with the normal selection strategy and the Gebauer-Moeller
/// product/chain criteria. All pairs of the current minimal lcm degree are
/// reduced together, in parallel; results are merged in a fixed order, so the
/// output does not depend on the thread count.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order = MonomialOrder::degrevlex());

/// Single-threaded textbook Buchberger: one pair at a time, product criterion
/// only, reduction by plain division. Kept as a cross-check.
GroebnerBasis buchberger_reference(std::span<const Polynomial> generators,
                                   const MonomialOrder& order = MonomialOrder::degrevlex());

/// f in (generators) (plus the ring relation), decided by a DegRevLex basis.
bool ideal_member(const Polynomial& f, std::span<const Polynomial> generators);

/// Generators of (generators) intersected with the subring in the last
/// n-k variables, from a Block(k) basis. Results live in the input ring.
std::vector<Polynomial> eliminate(std::span<const Polynomial> generators, std::size_t k);

namespace detail {

/// Generators plus the ring relation, nonzero, in `order`.
std::vector<Polynomial> prepare_generators(std::span<const Polynomial> generators, const MonomialOrder& order,
                                           Ring& ring_out);

/// Monic, tail-reduced, sorted basis from a set whose leading monomials
/// generate the initial ideal.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order);

}  // namespace detail

}  // namespace sympow
