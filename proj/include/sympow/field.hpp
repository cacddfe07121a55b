#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace sympow {

bool is_prime(std::uint64_t n);

/// The coefficient field: Q (characteristic 0) or F_p with p prime, p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  /// 0 selects Q; anything else must be a prime below 2^31.
  static Field of_characteristic(std::uint32_t characteristic);

  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  friend class FieldScalar;
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An element of a Field. Residues are kept in [0, p); rationals in lowest
/// terms with positive denominator.
class FieldScalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    bool operator==(const Residue&) const = default;
  };

  FieldScalar() : v_(mpq_class(0)) {}

  static FieldScalar zero(Field k) { return from_int(0, k); }
  static FieldScalar one(Field k) { return from_int(1, k); }
  static FieldScalar from_int(long long value, Field k);
  static FieldScalar from_integer(const mpz_class& value, Field k);
  static FieldScalar from_rational(const mpq_class& value);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }

  /// Precondition: is_rational().
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  /// Precondition: !is_rational().
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;
  FieldScalar pow(std::uint64_t k) const;

  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  bool operator==(const FieldScalar& o) const { return v_ == o.v_; }

  /// Integers print bare; proper fractions as "a/b".
  std::string to_string() const;

 private:
  explicit FieldScalar(Residue r) : v_(r) {}
  explicit FieldScalar(mpq_class q) : v_(std::move(q)) {}
  std::variant<Residue, mpq_class> v_;
};

}  // namespace sympow
