#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sympow/field.hpp"
#include "sympow/term.hpp"

namespace sympow {

class Polynomial;
class RingSpec;

using Ring = std::shared_ptr<const RingSpec>;

/// A polynomial ring k[x_1..x_n], optionally modulo one relation f_rel
/// (a hypersurface A = R/(f_rel)). Always held through `Ring`.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
 public:
  static Ring create(std::vector<std::string> variables, Field field);
  /// Same variables and field, quotiented by `relation` (parsed in the
  /// relation-free ring).
  static Ring create(std::vector<std::string> variables, Field field, const std::string& relation);
  /// Inline form "char=<n>; vars=<a,b,..>[; rel=<poly>]".
  static Ring parse(const std::string& text);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  Field field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool has_relation() const { return relation_.has_value(); }
  /// The relation in this ring's default order; precondition: has_relation().
  Polynomial relation() const;

  /// This ring with the relation dropped (itself when there is none).
  Ring ambient() const;
  /// A ring with one fresh variable prepended; the relation is carried over.
  Ring with_tag() const;
  /// Same variables and field with `relation` attached (terms in the
  /// relation-free ring over the same variables).
  Ring with_relation(const Polynomial& relation) const;

  /// Structural equality: variables, field, relation.
  bool same_as(const RingSpec& other) const;

  /// Inline form accepted by parse().
  std::string to_string() const;

 private:
  RingSpec(std::vector<std::string> variables, Field field, std::optional<std::vector<Term>> relation);

  std::vector<std::string> variables_;
  Field field_;
  std::optional<std::vector<Term>> relation_;
};

bool same_ring(const Ring& a, const Ring& b);

}  // namespace sympow
