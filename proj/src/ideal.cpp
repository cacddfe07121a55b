#include "sympow/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sympow/errors.hpp"
#include "sympow/limits.hpp"
#include "sympow/parser.hpp"

namespace sympow {

struct Ideal::Cache {
  std::mutex mutex;
  std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw UsageError("ideal needs a ring");
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw UsageError("ideal generator lives in a different ring");
    if (g.is_zero()) continue;
    Polynomial h = g.with_order(MonomialOrder::degrevlex()).rebase(ring_);
    const Polynomial key = h.monic();
    if (std::none_of(gens_.begin(), gens_.end(), [&](const Polynomial& e) { return e.monic() == key; }))
      gens_.push_back(std::move(h));
  }
}

Ideal Ideal::unit(Ring ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(Ring ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::parse(const std::string& text, const Ring& ring) { return Ideal(ring, parse_poly_list(text, ring)); }

const GroebnerBasis& Ideal::basis(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->bases.find(order);
  if (it != cache_->bases.end()) return *it->second;
  std::vector<Polynomial> input = gens_;
  if (input.empty()) input.push_back(Polynomial::zero(ring_));
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(input, order));
  return *cache_->bases.emplace(order, std::move(gb)).first->second;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return basis().contains(f.rebase(ring_));
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw UsageError("ideal sum: ring mismatch");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw UsageError("ideal product: ring mismatch");
  std::vector<Polynomial> g;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::rebase(const Ring& target) const {
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.rebase(target));
  return Ideal(target, std::move(g));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

// ---------------------------------------------------------------- powers

std::vector<Polynomial> interreduce_generators(std::vector<Polynomial> generators) {
  std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
  if (generators.size() <= 1) return generators;
  const bool monomial = std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_monomial(); });
  if (monomial && !generators.front().ring()->has_relation()) {
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const Monomial& m = generators[i].lead_monomial();
      bool redundant = false;
      for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& o = generators[j].lead_monomial();
        // equal monomials: keep the first occurrence
        if (o.divides(m) && (!(o == m) || j < i)) redundant = true;
      }
      if (!redundant) kept.push_back(generators[i]);
    }
    return kept;
  }
  std::vector<char> keep(generators.size(), 1);
  for (std::size_t i = generators.size(); i-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (j != i && keep[j]) others.push_back(generators[j]);
    if (others.empty()) continue;
    if (ideal_member(generators[i], others)) keep[i] = 0;
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (keep[i]) out.push_back(std::move(generators[i]));
  return out;
}

Ideal ideal_power(const Ideal& ideal, unsigned m) {
  if (m == 0) throw UsageError("ideal_power: exponent must be at least 1");
  const auto& gens = ideal.generators();
  if (gens.empty()) return ideal;
  // number of m-fold multisets: C(k + m - 1, m)
  double count = 1;
  for (unsigned i = 1; i <= m; ++i) count = count * static_cast<double>(gens.size() - 1 + i) / i;
  if (count > static_cast<double>(limits().max_power_generators))
    throw CapExceeded("max power generators", std::to_string(static_cast<long long>(count)) + " products");

  // multisets i_1 <= i_2 <= ... <= i_m, built by extending the previous layer
  std::vector<std::pair<std::size_t, Polynomial>> layer;
  for (std::size_t i = 0; i < gens.size(); ++i) layer.emplace_back(i, gens[i]);
  for (unsigned step = 1; step < m; ++step) {
    std::vector<std::pair<std::size_t, Polynomial>> next;
    for (const auto& [last, prod] : layer)
      for (std::size_t i = last; i < gens.size(); ++i) next.emplace_back(i, prod * gens[i]);
    layer = std::move(next);
  }
  std::vector<Polynomial> products;
  products.reserve(layer.size());
  for (auto& [_, p] : layer) products.push_back(std::move(p));
  return Ideal(ideal.ring(), interreduce_generators(std::move(products)));
}

// ---------------------------------------------------------------- elimination helpers

namespace {

/// Eliminates the tag variable of `tagged` and maps the survivors back to
/// `ring`, dropping copies of the relation (zero in the quotient).
Ideal contract_tag(const std::vector<Polynomial>& tagged, const Ring& ring) {
  std::vector<Polynomial> out;
  std::optional<Polynomial> rel;
  if (ring->has_relation()) rel = ring->relation();
  for (const auto& g : eliminate(tagged, 1)) {
    Polynomial h = g.dropped_into(ring, 1);
    if (rel) {
      const Polynomial r[] = {*rel};
      if (normal_form(h, r, h.order()).remainder.is_zero()) continue;
    }
    out.push_back(std::move(h));
  }
  return Ideal(ring, std::move(out));
}

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!same_ring(a, b)) throw UsageError(std::string(what) + ": ring mismatch");
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  const Ring& ring = a.ring();
  if (a.generators().empty() || b.generators().empty()) return Ideal::zero(ring);
  const Ring tagged = ring->with_tag();
  const Polynomial t = Polynomial::variable(tagged, 0);
  const Polynomial one_minus_t = Polynomial::constant(tagged, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.shifted_into(tagged, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.shifted_into(tagged, 1));
  return contract_tag(gens, ring);
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "colon");
  if (f.is_zero()) throw UsageError("colon: divisor must be nonzero");
  const Ring& ring = ideal.ring();
  if (f.is_constant()) return ideal;
  const Ring base = ring->ambient();
  std::vector<Polynomial> lifted;
  for (const auto& g : ideal.generators()) lifted.push_back(g.rebase(base));
  if (ring->has_relation()) lifted.push_back(ring->relation().rebase(base));
  const Polynomial fb = f.rebase(base);
  const Ideal meet = intersect(Ideal(base, lifted), Ideal(base, {fb}));
  std::vector<Polynomial> quotients;
  const Polynomial divisor[] = {fb};
  for (const auto& h : meet.generators()) {
    DivisionCertificate cert = normal_form(h, divisor, h.order());
    if (!cert.remainder.is_zero()) throw InternalError("colon: intersection generator not divisible by f");
    quotients.push_back(cert.quotients[0].rebase(ring));
  }
  return Ideal(ring, std::move(quotients));
}

Ideal saturate_by_iteration(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "saturate");
  if (f.is_zero()) throw UsageError("saturate: f must be nonzero");
  Ideal current = ideal;
  const unsigned cap = limits().saturation_iterations;
  for (unsigned i = 0; i < cap; ++i) {
    Ideal next = colon(current, f);
    if (current.contains(next)) return current;
    current = std::move(next);
  }
  throw InternalError("saturate: colon chain did not stabilize within " + std::to_string(cap) + " steps");
}

Ideal saturate_by_elimination(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "saturate");
  if (f.is_zero()) throw UsageError("saturate: f must be nonzero");
  const Ring& ring = ideal.ring();
  const Ring tagged = ring->with_tag();
  const Polynomial t = Polynomial::variable(tagged, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.shifted_into(tagged, 1));
  gens.push_back(Polynomial::constant(tagged, 1) - t * f.shifted_into(tagged, 1));
  return contract_tag(gens, ring);
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  Ideal by_elimination = saturate_by_elimination(ideal, f);
  Ideal by_iteration = saturate_by_iteration(ideal, f);
  if (!by_elimination.equals(by_iteration))
    throw InternalError("saturate: iterated colon and tag elimination disagree");
  return by_elimination;
}

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(ideal.ring(), f.ring(), "radical_member");
  if (f.is_zero()) return true;
  const Ring tagged = ideal.ring()->with_tag();
  const Polynomial t = Polynomial::variable(tagged, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.shifted_into(tagged, 1));
  gens.push_back(Polynomial::constant(tagged, 1) - t * f.shifted_into(tagged, 1));
  return buchberger(gens).is_unit();
}

bool is_radical_maximal(const Ideal& ideal) {
  if (ideal.is_unit()) return false;
  const Ring& ring = ideal.ring();
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!radical_member(Polynomial::variable(ring, i), ideal)) return false;
  return true;
}

bool is_radical_maximal_by_dimension(const Ideal& ideal) {
  if (ideal.ring()->has_relation()) throw UsageError("dimension route needs a relation-free ring");
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw UsageError("dimension route needs homogeneous generators");
  if (ideal.is_unit()) return false;
  return krull_dim(ideal) == 0;
}

}  // namespace sympow
