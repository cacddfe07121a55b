#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace sympow {

inline constexpr std::size_t kMaxVariables = 32;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponent vector of fixed capacity with cached total degree and a
/// divisibility pre-filter mask.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exponents);
  explicit Monomial(std::span<const std::uint32_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t exponent = 1);

  std::size_t size() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  void set(std::size_t i, std::uint32_t e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial pow(std::uint32_t k) const;

  /// Prepends `count` zero exponents.
  Monomial shifted(std::size_t count) const;
  /// Removes the first `count` variables; precondition: they have exponent 0.
  Monomial dropped(std::size_t count) const;

  bool operator==(const Monomial& o) const;

  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t n_ = 0;
  std::uint64_t mask_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Lex, DegRevLex, or Block(k): DegRevLex on the first k variables, ties
/// broken by DegRevLex on the remaining ones (an elimination order for the
/// first block). Variable index 0 is the largest variable throughout.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, DegRevLex, Block };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static constexpr MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static constexpr MonomialOrder block(std::uint32_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const { return kind_; }
  std::uint32_t block_size() const { return block_; }
  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;
  auto operator<=>(const MonomialOrder&) const = default;

 private:
  constexpr MonomialOrder(Kind kind, std::uint32_t block) : kind_(kind), block_(block) {}
  Kind kind_ = Kind::DegRevLex;
  std::uint32_t block_ = 0;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace sympow
