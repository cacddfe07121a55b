#include "sympow/field.hpp"

#include "sympow/errors.hpp"

namespace sympow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw UsageError("characteristic " + std::to_string(p) + " is not below 2^31");
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::of_characteristic(std::uint32_t characteristic) {
  return characteristic == 0 ? rationals() : prime(characteristic);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

[[noreturn]] void mismatch() { throw UsageError("coefficient characteristic mismatch"); }

}  // namespace

FieldScalar FieldScalar::from_int(long long value, Field k) {
  if (!k.is_prime_field()) return FieldScalar(mpq_class(mpz_class(std::to_string(value))));
  const std::int64_t p = k.characteristic();
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return FieldScalar(Residue{static_cast<std::uint32_t>(r), k.characteristic()});
}

FieldScalar FieldScalar::from_integer(const mpz_class& value, Field k) {
  if (!k.is_prime_field()) return FieldScalar(mpq_class(value));
  return FieldScalar(Residue{reduce_mod(value, k.characteristic()), k.characteristic()});
}

FieldScalar FieldScalar::from_rational(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  return FieldScalar(std::move(q));
}

Field FieldScalar::field() const {
  if (auto r = std::get_if<Residue>(&v_)) return Field(r->modulus);
  return Field::rationals();
}

bool FieldScalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldScalar::is_one() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) mismatch();
    std::uint64_t s = std::uint64_t{a->value} + b->value;
    if (s >= a->modulus) s -= a->modulus;
    return FieldScalar(Residue{static_cast<std::uint32_t>(s), a->modulus});
  }
  if (!o.is_rational()) mismatch();
  return FieldScalar(mpq_class(rational() + o.rational()));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) mismatch();
    std::uint64_t s = std::uint64_t{a->value} + a->modulus - b->value;
    if (s >= a->modulus) s -= a->modulus;
    return FieldScalar(Residue{static_cast<std::uint32_t>(s), a->modulus});
  }
  if (!o.is_rational()) mismatch();
  return FieldScalar(mpq_class(rational() - o.rational()));
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) mismatch();
    std::uint64_t s = (std::uint64_t{a->value} * b->value) % a->modulus;
    return FieldScalar(Residue{static_cast<std::uint32_t>(s), a->modulus});
  }
  if (!o.is_rational()) mismatch();
  return FieldScalar(mpq_class(rational() * o.rational()));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

FieldScalar FieldScalar::operator-() const {
  if (auto a = std::get_if<Residue>(&v_))
    return FieldScalar(Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus});
  return FieldScalar(mpq_class(-rational()));
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw UsageError("division by zero in coefficient field");
  if (auto a = std::get_if<Residue>(&v_)) return FieldScalar(Residue{inverse_mod(a->value, a->modulus), a->modulus});
  return FieldScalar(mpq_class(1 / rational()));
}

FieldScalar FieldScalar::pow(std::uint64_t k) const {
  FieldScalar base = *this;
  FieldScalar acc = one(field());
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string FieldScalar::to_string() const {
  if (auto a = std::get_if<Residue>(&v_)) return std::to_string(a->value);
  const mpq_class& q = rational();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sympow
