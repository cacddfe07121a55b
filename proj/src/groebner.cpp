#include "sympow/groebner.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include <omp.h>

#include "sympow/errors.hpp"
#include "sympow/limits.hpp"

namespace sympow {

// ---------------------------------------------------------------- division

DivisionCertificate normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order) {
  std::vector<Polynomial> divs;
  divs.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw UsageError("normal_form: zero divisor");
    if (!same_ring(g.ring(), f.ring())) throw UsageError("normal_form: ring mismatch");
    divs.push_back(g.with_order(order));
  }
  std::vector<std::vector<Term>> quotient_terms(divs.size());
  std::vector<Term> remainder;
  std::vector<Term> work = f.with_order(order).terms();
  while (!work.empty()) {
    const Term lead = work.front();
    std::size_t hit = divs.size();
    for (std::size_t i = 0; i < divs.size(); ++i) {
      if (divs[i].lead_monomial().divides(lead.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == divs.size()) {
      remainder.push_back(lead);
      work.erase(work.begin());
      continue;
    }
    const Polynomial& g = divs[hit];
    const FieldScalar c = lead.coeff / g.lead_coeff();
    const Monomial shift = lead.mono / g.lead_monomial();
    quotient_terms[hit].push_back(Term{c, shift});
    const std::span<const Term> tail(g.terms().data() + 1, g.size() - 1);
    work = add_scaled(std::span<const Term>(work.data() + 1, work.size() - 1), tail, -c, &shift, order);
  }
  DivisionCertificate cert;
  for (std::size_t i = 0; i < divs.size(); ++i)
    cert.quotients.push_back(Polynomial::from_sorted(f.ring(), std::move(quotient_terms[i]), order));
  cert.remainder = Polynomial::from_sorted(f.ring(), std::move(remainder), order);
  return cert;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const MonomialOrder& order = f.order();
  const Polynomial gg = g.with_order(order);
  const Monomial l = lcm(f.lead_monomial(), gg.lead_monomial());
  return f.mul_term(f.lead_coeff().inverse(), l / f.lead_monomial()) -
         gg.mul_term(gg.lead_coeff().inverse(), l / gg.lead_monomial());
}

// ---------------------------------------------------------------- divisor index

void DivisorIndex::insert(const Monomial& m, std::uint32_t id) {
  std::uint32_t node = 0;
  for (std::size_t d = 0; d < nvars_; ++d) {
    auto& ch = nodes_[node].children;
    const std::uint32_t e = m[d];
    auto it = std::lower_bound(ch.begin(), ch.end(), e, [](const auto& p, std::uint32_t v) { return p.first < v; });
    if (it != ch.end() && it->first == e) {
      node = it->second;
    } else {
      const auto fresh = static_cast<std::uint32_t>(nodes_.size());
      ch.insert(it, {e, fresh});
      nodes_.push_back(Node{});
      node = fresh;
    }
  }
  nodes_[node].id = std::min(nodes_[node].id, id);
  ++size_;
}

std::uint32_t DivisorIndex::find_from(std::uint32_t node, std::size_t depth, const Monomial& m) const {
  if (depth == nvars_) return nodes_[node].id;
  std::uint32_t best = UINT32_MAX;
  const std::uint32_t limit = m[depth];
  for (const auto& [e, child] : nodes_[node].children) {
    if (e > limit) break;
    best = std::min(best, find_from(child, depth + 1, m));
  }
  return best;
}

std::uint32_t DivisorIndex::find(const Monomial& m) const {
  if (size_ == 0) return UINT32_MAX;
  return find_from(0, 0, m);
}

// ---------------------------------------------------------------- internals

namespace {

bool over_q(const Ring& r) { return !r->field().is_prime_field(); }

void check_terms(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("max polynomial terms", std::to_string(n) + " terms");
}

void divide_content(std::vector<Term>& a, std::vector<Term>& b) {
  mpz_class g = 0;
  for (const auto* v : {&a, &b})
    for (const auto& t : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
  if (g <= 1) return;
  const FieldScalar inv = FieldScalar::from_rational(mpq_class(mpz_class(1), g));
  for (auto* v : {&a, &b})
    for (auto& t : *v) t.coeff *= inv;
}

/// Full reduction of f by the indexed polynomials. With fraction_free (Q
/// only, reducers integer-primitive) the result is a nonzero multiple of
/// the normal form, returned primitive; otherwise the exact normal form.
Polynomial reduce_indexed(const Polynomial& f, const std::vector<Polynomial>& reducers, const DivisorIndex& index,
                          bool fraction_free, std::size_t max_terms) {
  const MonomialOrder& order = f.order();
  std::vector<Term> work = fraction_free ? f.primitive().terms() : f.terms();
  std::vector<Term> rem;
  std::size_t pos = 0;
  unsigned steps = 0;
  while (pos < work.size()) {
    const Term& lead = work[pos];
    const std::uint32_t id = index.find(lead.mono);
    if (id == UINT32_MAX) {
      rem.push_back(lead);
      ++pos;
      continue;
    }
    const Polynomial& g = reducers[id];
    const Monomial shift = lead.mono / g.lead_monomial();
    const std::span<const Term> tail(g.terms().data() + 1, g.size() - 1);
    std::span<const Term> rest(work.data() + pos + 1, work.size() - pos - 1);
    if (fraction_free) {
      mpz_class a = g.lead_coeff().rational().get_num();
      mpz_class b = lead.coeff.rational().get_num();
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a /= d;
      b /= d;
      std::vector<Term> scaled_rest(rest.begin(), rest.end());
      if (a != 1) {
        const FieldScalar fa = FieldScalar::from_integer(a, Field::rationals());
        for (auto& t : scaled_rest) t.coeff *= fa;
        for (auto& t : rem) t.coeff *= fa;
      }
      work = add_scaled(scaled_rest, tail, -FieldScalar::from_integer(b, Field::rationals()), &shift, order);
      if (++steps % 16 == 0) divide_content(work, rem);
    } else {
      const FieldScalar c = g.lead_coeff().is_one() ? lead.coeff : lead.coeff / g.lead_coeff();
      work = add_scaled(rest, tail, -c, &shift, order);
    }
    pos = 0;
    check_terms(work.size() + rem.size(), max_terms);
  }
  Polynomial r = Polynomial::from_sorted(f.ring(), std::move(rem), order);
  return fraction_free ? r.primitive() : r;
}

Polynomial normalize_element(const Polynomial& p, bool fraction_free) {
  return fraction_free ? p.primitive() : p.monic();
}

/// S-polynomial scaled to avoid denominators when both inputs are integer.
Polynomial s_polynomial_scaled(const Polynomial& f, const Polynomial& g, bool fraction_free) {
  if (!fraction_free) return s_polynomial(f, g);
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  return f.mul_term(g.lead_coeff(), l / f.lead_monomial()) - g.mul_term(f.lead_coeff(), l / g.lead_monomial());
}

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
};

class BatchBuchberger {
 public:
  BatchBuchberger(Ring ring, MonomialOrder order)
      : ring_(std::move(ring)),
        order_(order),
        fraction_free_(over_q(ring_)),
        index_(ring_->nvars()),
        max_terms_(limits().max_terms),
        max_basis_(limits().max_basis),
        threads_(limits().threads) {}

  void add_input(const Polynomial& g) {
    if (unit_) return;
    Polynomial r = reduce_indexed(g, polys_, index_, fraction_free_, max_terms_);
    if (!r.is_zero()) insert(normalize_element(r, fraction_free_));
  }

  void run() {
    while (!unit_ && !pairs_.empty()) {
      std::vector<Pair> batch = select_batch();
      std::vector<std::optional<Polynomial>> reduced(batch.size());
      std::vector<std::exception_ptr> errors(batch.size());
      const auto count = static_cast<long>(batch.size());
      const int threads = threads_ > 0 ? threads_ : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (count > 1)
      for (long k = 0; k < count; ++k) {
        try {
          const Pair& pr = batch[static_cast<std::size_t>(k)];
          Polynomial s = s_polynomial_scaled(polys_[pr.i], polys_[pr.j], fraction_free_);
          reduced[static_cast<std::size_t>(k)] = reduce_indexed(s, polys_, index_, fraction_free_, max_terms_);
        } catch (...) {
          errors[static_cast<std::size_t>(k)] = std::current_exception();
        }
      }
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
      const std::size_t before = polys_.size();
      for (auto& r : reduced) {
        if (unit_) break;
        Polynomial p = std::move(*r);
        if (p.is_zero()) continue;
        if (polys_.size() != before) p = reduce_indexed(p, polys_, index_, fraction_free_, max_terms_);
        if (!p.is_zero()) insert(normalize_element(p, fraction_free_));
      }
    }
  }

  std::vector<Polynomial> result() const {
    if (unit_) return {Polynomial::constant(ring_, 1, order_)};
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(polys_[i]);
    return out;
  }

 private:
  std::vector<Pair> select_batch() {
    std::uint32_t deg = UINT32_MAX;
    for (const auto& p : pairs_) deg = std::min(deg, p.lcm.degree());
    std::vector<Pair> batch, rest;
    for (auto& p : pairs_) (p.lcm.degree() == deg ? batch : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      if (auto c = compare(a.lcm, b.lcm, order_); c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    return batch;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Polynomial h) {
    if (polys_.size() >= max_basis_)
      throw CapExceeded("max basis size", std::to_string(max_basis_) + " polynomials");
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    const auto hid = static_cast<std::uint32_t>(polys_.size());
    const Monomial& lh = h.lead_monomial();
    const bool h_monomial = h.is_monomial();

    struct Candidate {
      std::uint32_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cand;
    for (std::uint32_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].lead_monomial();
      cand.push_back(Candidate{g, lcm(lh, lg), lh.coprime(lg)});
    }
    // M: drop pairs whose lcm has a proper divisor among the other new lcms.
    DivisorIndex lcm_index(ring_->nvars());
    {
      for (std::size_t k = 0; k < cand.size(); ++k) lcm_index.insert(cand[k].lcm, static_cast<std::uint32_t>(k));
      for (auto& c : cand) {
        Monomial probe = c.lcm;
        // a proper divisor exists iff some variable can be lowered and still be divisible
        for (std::size_t v = 0; v < probe.size() && c.keep; ++v) {
          if (probe[v] == 0) continue;
          Monomial lowered = probe;
          lowered.set(v, probe[v] - 1);
          if (lcm_index.find(lowered) != UINT32_MAX) c.keep = false;
        }
      }
    }
    // F: one representative per lcm; a coprime member kills the class.
    {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < cand.size(); ++k)
        if (cand[k].keep) idx.push_back(k);
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (auto c = compare(cand[a].lcm, cand[b].lcm, order_); c != 0) return c < 0;
        return cand[a].g < cand[b].g;
      });
      for (std::size_t s = 0; s < idx.size();) {
        std::size_t e = s;
        bool any_coprime = false;
        while (e < idx.size() && cand[idx[e]].lcm == cand[idx[s]].lcm) any_coprime |= cand[idx[e++]].coprime;
        for (std::size_t k = s; k < e; ++k) cand[idx[k]].keep = !any_coprime && k == s;
        s = e;
      }
    }
    // B: old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        const Monomial& li = polys_[p.i].lead_monomial();
        const Monomial& lj = polys_[p.j].lead_monomial();
        if (!(lcm(li, lh) == p.lcm) && !(lcm(lj, lh) == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (const auto& c : cand) {
      if (!c.keep) continue;
      if (h_monomial && polys_[c.g].is_monomial()) continue;  // S-polynomial of two monomials vanishes
      pairs_.push_back(Pair{c.g, hid, c.lcm});
    }
    for (std::uint32_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lh.divides(polys_[g].lead_monomial())) active_[g] = 0;

    index_.insert(lh, hid);
    polys_.push_back(std::move(h));
    active_.push_back(1);
  }

  Ring ring_;
  MonomialOrder order_;
  bool fraction_free_;
  std::vector<Polynomial> polys_;
  std::vector<char> active_;
  DivisorIndex index_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  std::size_t max_terms_;
  std::size_t max_basis_;
  int threads_;
};

}  // namespace

// ---------------------------------------------------------------- public

namespace detail {

std::vector<Polynomial> prepare_generators(std::span<const Polynomial> generators, const MonomialOrder& order,
                                           Ring& ring_out) {
  if (generators.empty()) throw UsageError("generator list must name a ring (pass a zero polynomial for (0))");
  ring_out = generators.front().ring();
  std::vector<Polynomial> out;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring_out)) throw UsageError("generators live in different rings");
    if (!g.is_zero()) out.push_back(g.with_order(order));
  }
  if (ring_out->has_relation()) out.push_back(ring_out->relation().with_order(order));
  return out;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order) {
  for (auto& g : basis) g = g.with_order(order).monic();
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) { return compare(a.lead_monomial(), b.lead_monomial(), order) < 0; });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.lead_monomial().divides(g.lead_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  if (minimal.empty()) return minimal;
  DivisorIndex index(minimal.front().ring()->nvars());
  for (std::uint32_t i = 0; i < minimal.size(); ++i) index.insert(minimal[i].lead_monomial(), i);
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  const std::size_t cap = limits().max_terms;
  for (const auto& g : minimal) {
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    Polynomial t = reduce_indexed(Polynomial::from_sorted(g.ring(), std::move(tail), order), minimal, index, false, cap);
    std::vector<Term> terms;
    terms.reserve(t.size() + 1);
    terms.push_back(g.lead_term());
    terms.insert(terms.end(), t.terms().begin(), t.terms().end());
    out.push_back(Polynomial::from_sorted(g.ring(), std::move(terms), order));
  }
  return out;
}

}  // namespace detail

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> reduced,
                             std::vector<Polynomial> source)
    : ring_(std::move(ring)),
      order_(order),
      basis_(std::move(reduced)),
      source_(std::move(source)),
      index_(ring_->nvars()) {
  for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.insert(basis_[i].lead_monomial(), i);
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw UsageError("reduce: ring mismatch");
  return reduce_indexed(f.with_order(order_), basis_, index_, false, limits().max_terms);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order) {
  Ring ring;
  std::vector<Polynomial> gens = detail::prepare_generators(generators, order, ring);
  std::vector<Polynomial> source(generators.begin(), generators.end());
  if (gens.empty()) return GroebnerBasis(ring, order, {}, std::move(source));
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (auto c = compare(a.lead_monomial(), b.lead_monomial(), order); c != 0) return c < 0;
    return a.size() < b.size();
  });
  BatchBuchberger run(ring, order);
  for (const auto& g : gens) run.add_input(g);
  run.run();
  return GroebnerBasis(ring, order, detail::interreduce(run.result(), order), std::move(source));
}

bool ideal_member(const Polynomial& f, std::span<const Polynomial> generators) {
  if (generators.empty()) return f.is_zero();
  return buchberger(generators, MonomialOrder::degrevlex()).contains(f);
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> generators, std::size_t k) {
  if (generators.empty()) return {};
  if (k >= generators.front().ring()->nvars()) throw UsageError("eliminate: k must be below the variable count");
  GroebnerBasis gb = buchberger(generators, MonomialOrder::block(static_cast<std::uint32_t>(k)));
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators())
    if (!g.involves_first(k)) out.push_back(g.with_order(MonomialOrder::degrevlex()));
  return out;
}

}  // namespace sympow
