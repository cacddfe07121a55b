#include "sympow/polynomial.hpp"

#include <algorithm>

#include "sympow/errors.hpp"
#include "sympow/parser.hpp"

namespace sympow {

Polynomial::Polynomial(Ring ring, std::vector<Term> terms, MonomialOrder order)
    : ring_(std::move(ring)), order_(order), terms_(std::move(terms)) {
  if (!ring_) throw UsageError("polynomial needs a ring");
  for (const auto& t : terms_) {
    if (t.mono.size() != ring_->nvars()) throw UsageError("monomial arity does not match the ring");
    if (!t.coeff.is_zero() && t.coeff.field() != ring_->field()) throw UsageError("coefficient field does not match the ring");
  }
  canonicalize();
}

Polynomial Polynomial::from_sorted(Ring ring, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p;
  p.ring_ = std::move(ring);
  p.order_ = order;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::zero(Ring ring, MonomialOrder order) { return from_sorted(std::move(ring), {}, order); }

Polynomial Polynomial::constant(Ring ring, const FieldScalar& c, MonomialOrder order) {
  const std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{c, Monomial(n)}}, order);
}

Polynomial Polynomial::constant(Ring ring, long long c, MonomialOrder order) {
  const Field k = ring->field();
  return constant(std::move(ring), FieldScalar::from_int(c, k), order);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index, MonomialOrder order) {
  if (index >= ring->nvars()) throw UsageError("variable index out of range");
  return monomial(ring, Monomial::variable(ring->nvars(), index), order);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, MonomialOrder order) {
  const Field k = ring->field();
  return Polynomial(std::move(ring), {Term{FieldScalar::one(k), m}}, order);
}

Field Polynomial::field() const { return ring_->field(); }

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, order_) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::min_degree() const {
  if (terms_.empty()) throw UsageError("minimum degree of the zero polynomial");
  std::uint32_t d = terms_[0].mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_[0].mono.degree(); });
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  return Polynomial(ring_, terms_, order);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw UsageError("ring mismatch between polynomials");
}

std::vector<Term> add_scaled(std::span<const Term> a, std::span<const Term> b, const FieldScalar& c,
                             const Monomial* shift, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term next;
  bool have_next = false;
  auto load = [&] {
    have_next = j < b.size();
    if (have_next) next = Term{b[j].coeff * c, shift ? b[j].mono * *shift : b[j].mono};
  };
  load();
  while (i < a.size() || have_next) {
    if (!have_next) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      if (!next.coeff.is_zero()) out.push_back(std::move(next));
      ++j;
      load();
      continue;
    }
    const auto cmp = compare(a[i].mono, next.mono, order);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      if (!next.coeff.is_zero()) out.push_back(std::move(next));
      ++j;
      load();
    } else {
      FieldScalar s = a[i].coeff + next.coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(s), a[i].mono});
      ++i;
      ++j;
      load();
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  const Polynomial& rhs = o.order_ == order_ ? o : o.with_order(order_);
  return from_sorted(ring_, add_scaled(terms_, rhs.terms_, FieldScalar::one(field()), nullptr, order_), order_);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  const Polynomial& rhs = o.order_ == order_ ? o : o.with_order(order_);
  return from_sorted(ring_, add_scaled(terms_, rhs.terms_, -FieldScalar::one(field()), nullptr, order_), order_);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return from_sorted(ring_, std::move(t), order_);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return zero(ring_, order_);
  if (o.size() == 1) return mul_term(o.terms_[0].coeff, o.terms_[0].mono);
  if (size() == 1) return o.with_order(order_).mul_term(terms_[0].coeff, terms_[0].mono);
  std::vector<Term> prod;
  prod.reserve(size() * o.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
  Polynomial r;
  r.ring_ = ring_;
  r.order_ = order_;
  r.terms_ = std::move(prod);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::scaled(const FieldScalar& c) const {
  if (c.is_zero()) return zero(ring_, order_);
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff *= c;
  return from_sorted(ring_, std::move(t), order_);
}

Polynomial Polynomial::mul_term(const FieldScalar& c, const Monomial& m) const {
  if (c.is_zero()) return zero(ring_, order_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.coeff * c, x.mono * m});
  return from_sorted(ring_, std::move(t), order_);
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial acc = constant(ring_, 1, order_);
  Polynomial base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coeff().is_one()) return *this;
  return scaled(lead_coeff().inverse());
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  if (field().is_prime_field()) return monic();
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    const mpq_class& q = t.coeff.rational();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(lead_coeff().rational()) < 0) factor = -factor;
  return scaled(FieldScalar::from_rational(factor));
}

Polynomial Polynomial::derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.mono[index];
    if (e == 0) continue;
    FieldScalar c = t.coeff * FieldScalar::from_int(e, field());
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    out.push_back(Term{std::move(c), m});
  }
  return Polynomial(ring_, std::move(out), order_);
}

Polynomial Polynomial::rebase(const Ring& target) const {
  if (target->variables() != ring_->variables() || target->field() != ring_->field())
    throw UsageError("cannot rebase between rings with different variables or field");
  return from_sorted(target, terms_, order_);
}

Polynomial Polynomial::shifted_into(const Ring& target, std::size_t count) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.coeff, x.mono.shifted(count)});
  return Polynomial(target, std::move(t), order_);
}

Polynomial Polynomial::dropped_into(const Ring& target, std::size_t count) const {
  if (involves_first(count)) throw UsageError("polynomial involves eliminated variables");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.coeff, x.mono.dropped(count)});
  return Polynomial(target, std::move(t), MonomialOrder::degrevlex());
}

bool Polynomial::involves_first(std::size_t count) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < count; ++i)
      if (t.mono[i]) return true;
  return false;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (order_ == o.order_) return terms_ == o.terms_;
  return terms_ == o.with_order(order_).terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const auto& names = ring_->variables();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (k == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      s += c;
    } else if (c == "1") {
      s += mono;
    } else {
      s += c + "*" + mono;
    }
  }
  return s;
}

}  // namespace sympow
