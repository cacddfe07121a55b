#include "sympow/monomial.hpp"

#include <algorithm>

#include "sympow/errors.hpp"

namespace sympow {

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw UsageError("too many variables (max " + std::to_string(kMaxVariables) + ")");
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const std::uint32_t> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw CapExceeded("exponent", "exponent above 65535");
    exp_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  refresh();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t exponent) {
  Monomial m(nvars);
  m.set(index, exponent);
  return m;
}

std::uint32_t Monomial::support() const {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i]) s |= 1u << i;
  return s;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (e > kMaxExponent) throw CapExceeded("exponent", "exponent above 65535");
  exp_[i] = static_cast<std::uint16_t>(e);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  if (n_ == 0) return;
  const std::size_t bits = 64 / n_;
  for (std::size_t i = 0; i < n_; ++i) {
    degree_ += exp_[i];
    const std::size_t fill = std::min<std::size_t>(exp_[i], bits);
    if (fill) mask_ |= ((fill == 64 ? ~0ull : ((1ull << fill) - 1)) << (i * bits));
  }
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (mask_ & ~other.mask_)) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] && other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint32_t e = std::uint32_t{exp_[i]} + o.exp_[i];
    if (e > kMaxExponent) throw CapExceeded("exponent", "exponent above 65535");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.refresh();
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::uint64_t e = std::uint64_t{exp_[i]} * k;
    if (e > kMaxExponent) throw CapExceeded("exponent", "exponent above 65535");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.refresh();
  return r;
}

Monomial Monomial::shifted(std::size_t count) const {
  Monomial r(n_ + count);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i + count] = exp_[i];
  r.refresh();
  return r;
}

Monomial Monomial::dropped(std::size_t count) const {
  Monomial r(n_ - count);
  for (std::size_t i = count; i < n_; ++i) r.exp_[i - count] = exp_[i];
  r.refresh();
  return r;
}

bool Monomial::operator==(const Monomial& o) const {
  if (n_ != o.n_ || degree_ != o.degree_ || mask_ != o.mask_) return false;
  return std::equal(exp_.begin(), exp_.begin() + n_, o.exp_.begin());
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n_; ++i) h = (h ^ exp_[i]) * 1099511628211ull;
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::array<std::uint32_t, kMaxVariables> e{};
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::span<const std::uint32_t>(e.data(), a.size()));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::array<std::uint32_t, kMaxVariables> e{};
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::span<const std::uint32_t>(e.data(), a.size()));
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

namespace {

// DegRevLex restricted to variables [lo, hi).
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  const std::size_t n = a.size();
  switch (order.kind()) {
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::Block: {
      const std::size_t k = std::min<std::size_t>(order.block_size(), n);
      if (auto c = degrevlex_range(a, b, 0, k); c != 0) return c;
      return degrevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace sympow
