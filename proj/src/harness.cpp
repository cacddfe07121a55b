#include "sympow/harness.hpp"

#include <exception>

#include <omp.h>

#include "sympow/charp.hpp"
#include "sympow/errors.hpp"
#include "sympow/limits.hpp"
#include "sympow/parser.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::SP1: return "SP1";
    case CheckKind::SP2: return "SP2";
    case CheckKind::ID1: return "ID1";
    case CheckKind::ID2: return "ID2";
    case CheckKind::WeakID2: return "WEAK_ID2";
  }
  return "?";
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Verified: return "VERIFIED";
    case Status::Counterexample: return "COUNTEREXAMPLE";
    case Status::PreconditionFailed: return "PRECONDITION_FAILED";
    case Status::Vacuous: return "VACUOUS";
  }
  return "?";
}

CheckKind parse_check_kind(const std::string& text) {
  for (CheckKind k : {CheckKind::SP1, CheckKind::SP2, CheckKind::ID1, CheckKind::ID2, CheckKind::WeakID2})
    if (to_string(k) == text) return k;
  throw UsageError("unknown check '" + text + "' (expected SP1, SP2, ID1, ID2 or WEAK_ID2)");
}

Status parse_status(const std::string& text) {
  for (Status s : {Status::Verified, Status::Counterexample, Status::PreconditionFailed, Status::Vacuous})
    if (to_string(s) == text) return s;
  throw UsageError("unknown status '" + text + "'");
}

int exit_code(Status status) {
  switch (status) {
    case Status::Verified: return 0;
    case Status::Counterexample: return 2;
    case Status::PreconditionFailed:
    case Status::Vacuous: return 3;
  }
  return 1;
}

const std::string& toolkit_version() {
  static const std::string v = SYMPOW_VERSION;
  return v;
}

void Report::set(const std::string& name, Quantity value) {
  for (auto& [k, v] : quantities)
    if (k == name) {
      v = value;
      return;
    }
  quantities.emplace_back(name, value);
}

const Quantity* Report::get(const std::string& name) const {
  for (const auto& [k, v] : quantities)
    if (k == name) return &v;
  return nullptr;
}

const std::string* Report::witness(const std::string& name) const {
  for (const auto& [k, v] : witnesses)
    if (k == name) return &v;
  return nullptr;
}

namespace {

std::int64_t as_int(unsigned v) { return static_cast<std::int64_t>(v); }

void log_primes(Report& r) {
  r.assumptions.push_back("p is asserted prime (not verified)");
  r.assumptions.push_back("q is asserted prime (not verified)");
}

/// Re-checks a symbolic witness before it goes into a report.
void record_symbolic_witness(Report& r, const std::string& name, const SymbolicMembership& sm, const AssertedPrime& p,
                             const Ideal& pm) {
  if (!sm.witness) return;
  if (p.contains(*sm.witness) || !pm.contains(*sm.witness * sm.element))
    throw InternalError("symbolic witness failed its re-check");
  r.witnesses.emplace_back(name, to_input_string(*sm.witness));
}

}  // namespace

Report check_sp(const ConjectureInstance& inst) {
  if (inst.check != CheckKind::SP1 && inst.check != CheckKind::SP2) throw UsageError("check_sp needs an SP1/SP2 instance");
  if (inst.f.is_zero()) throw UsageError("instance element f must be nonzero");
  Report r;
  r.seed = inst.seed;
  log_primes(r);
  const unsigned n_exp = inst.check == CheckKind::SP1 ? 1 : inst.n;
  r.set("m", as_int(inst.m));
  r.set("n", as_int(n_exp));
  if (inst.ring->has_relation()) {
    r.assumptions.push_back("ring carries a relation: SP conjectures concern regular rings");
    r.status = Status::PreconditionFailed;
    return r;
  }
  if (inst.p.is_unit() || inst.q.is_unit()) {
    r.assumptions.push_back("p or q is the unit ideal");
    r.status = Status::PreconditionFailed;
    return r;
  }
  const std::size_t d = inst.ring->nvars();
  const bool radical_maximal = is_radical_maximal(inst.p + inst.q);
  const unsigned dim_p = krull_dim(inst.p);
  const unsigned dim_q = krull_dim(inst.q);
  r.set("dim_R", as_int(static_cast<unsigned>(d)));
  r.set("dim_R_mod_p", as_int(dim_p));
  r.set("dim_R_mod_q", as_int(dim_q));
  r.set("radical_p_plus_q_maximal", radical_maximal);
  if (radical_maximal) r.set("serre_bound_holds", dim_p + dim_q <= d);
  if (!radical_maximal || dim_p + dim_q != d) {
    r.status = Status::PreconditionFailed;
    return r;
  }
  if (inst.separator) r.assumptions.push_back("separator " + to_input_string(*inst.separator) + " (documented, not used for membership)");

  const AssertedPrime p(inst.p), q(inst.q);
  PowerLadder p_powers(inst.p), q_powers(inst.q);
  const SymbolicMembership in_p = symbolic_member(inst.f, p, inst.m, p_powers);
  r.set("f_in_p_symbolic", in_p.verdict);
  bool in_q = false;
  if (inst.check == CheckKind::SP1) {
    in_q = inst.q.contains(inst.f);
    r.set("f_in_q", in_q);
  } else {
    const SymbolicMembership sq = symbolic_member(inst.f, q, n_exp, q_powers);
    in_q = sq.verdict;
    r.set("f_in_q_symbolic", in_q);
    if (in_p.verdict && in_q) record_symbolic_witness(r, "q_symbolic_witness", sq, q, q_powers.power(n_exp));
  }
  if (!in_p.verdict || !in_q) {
    r.status = Status::Vacuous;
    return r;
  }
  record_symbolic_witness(r, "p_symbolic_witness", in_p, p, p_powers.power(inst.m));
  const bool contained = ideal_power(Ideal::maximal(inst.ring), inst.m + n_exp).contains(inst.f);
  r.set("f_in_maximal_power", contained);
  if (contained) {
    r.status = Status::Verified;
  } else {
    r.status = Status::Counterexample;
    r.witnesses.emplace_back("failing_element", to_input_string(inst.f));
  }
  return r;
}

Report check_id(const ConjectureInstance& inst) {
  if (inst.check != CheckKind::ID1 && inst.check != CheckKind::ID2 && inst.check != CheckKind::WeakID2)
    throw UsageError("check_id needs an ID1/ID2/WEAK_ID2 instance");
  if (inst.f.is_zero()) throw UsageError("instance element f must be nonzero");
  Report r;
  r.seed = inst.seed;
  log_primes(r);
  r.assumptions.push_back(
      "A = R/(f) is a hypersurface over a polynomial ring: excellent and equidimensional, so quasi-unmixed and "
      "A/P, A/Q analytically unramified (logged, not computed)");
  if (inst.ring->has_relation()) {
    r.assumptions.push_back("ID instances take f in a relation-free ambient ring");
    r.status = Status::PreconditionFailed;
    return r;
  }
  const bool f_in_both = inst.p.contains(inst.f) && inst.q.contains(inst.f);
  r.set("f_in_p_and_q", f_in_both);
  if (!f_in_both || inst.p.is_unit() || inst.q.is_unit()) {
    r.status = Status::PreconditionFailed;
    return r;
  }
  const bool radical_maximal = is_radical_maximal(inst.p + inst.q);
  r.set("radical_P_plus_Q_maximal", radical_maximal);
  if (!radical_maximal) {
    r.status = Status::PreconditionFailed;
    return r;
  }
  const AssertedPrime p(inst.p), q(inst.q);
  const HypersurfaceMultiplicities e = hypersurface_mults(inst.f, p, q);
  const unsigned dim_p = krull_dim(inst.p);
  const unsigned dim_q = krull_dim(inst.q);
  const unsigned dim_a = static_cast<unsigned>(inst.ring->nvars()) - 1;
  r.set("eA", as_int(e.e_A));
  r.set("eAP", as_int(e.e_AP));
  r.set("eAQ", as_int(e.e_AQ));
  r.set("dim_A", as_int(dim_a));
  r.set("dim_A_mod_P", as_int(dim_p));
  r.set("dim_A_mod_Q", as_int(dim_q));
  r.set("dim_sum", as_int(dim_p + dim_q));
  r.set("serre_bound_holds", dim_p + dim_q <= dim_a + 1);

  const bool hypothesis = inst.check == CheckKind::ID1 ? e.e_A == e.e_AP : e.e_A < e.e_AP + e.e_AQ;
  const unsigned bound = inst.check == CheckKind::WeakID2 ? dim_a + 1 : dim_a;
  r.set("hypothesis_holds", hypothesis);
  r.set("dimension_bound", as_int(bound));
  if (!hypothesis) {
    r.status = Status::Vacuous;
    return r;
  }
  PowerLadder p_powers(inst.p), q_powers(inst.q);
  record_symbolic_witness(r, "p_order_witness", symbolic_member(inst.f, p, e.e_AP, p_powers), p, p_powers.power(e.e_AP));
  record_symbolic_witness(r, "q_order_witness", symbolic_member(inst.f, q, e.e_AQ, q_powers), q, q_powers.power(e.e_AQ));
  r.status = dim_p + dim_q <= bound ? Status::Verified : Status::Counterexample;
  return r;
}

Report check(const ConjectureInstance& inst) {
  switch (inst.check) {
    case CheckKind::SP1:
    case CheckKind::SP2: return check_sp(inst);
    default: return check_id(inst);
  }
}

std::vector<Report> check_batch(const std::vector<ConjectureInstance>& instances) {
  std::vector<Report> out(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  const Limits caller = limits();
  const auto count = static_cast<long>(instances.size());
  const int threads = caller.threads > 0 ? caller.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    LimitsScope scope(caller);
    try {
      out[static_cast<std::size_t>(i)] = check(instances[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Report kr_example(unsigned s, unsigned q, std::uint32_t characteristic) {
  if (s < 3) throw UsageError("kr_example: s must be at least 3");
  if (q < 1) throw UsageError("kr_example: q must be at least 1");
  if ((2 * q) % (s - 1) != 0)
    throw UsageError("kr_example: s-1 = " + std::to_string(s - 1) + " does not divide 2q = " + std::to_string(2 * q));
  if (characteristic == 0) throw UsageError("kr_example: needs positive characteristic");
  const unsigned m = 2 * q / (s - 1) + 1;
  const unsigned ms = m * s;

  const std::string S = std::to_string(s), M = std::to_string(m), Q = std::to_string(q);
  const Ring ring = RingSpec::create({"x", "y", "z", "u"}, Field::prime(characteristic), "x*y*(z+u) - u^" + S + "*z");
  const Ring base = ring->ambient();
  auto P = [&](const std::string& text) { return parse_poly(text, ring); };

  Report r;
  r.set("s", as_int(s));
  r.set("q", as_int(q));
  r.set("characteristic", as_int(characteristic));
  r.set("m", as_int(m));
  r.set("ms", as_int(ms));
  r.assumptions.push_back("p = (x,u) and q = (y,z) asserted prime: A/p = k[y,z], A/q = k[x,u]");
  r.assumptions.push_back("coefficients in F_" + std::to_string(characteristic) + ", not its algebraic closure");

  const Ideal p = Ideal::parse("x, u", ring);
  const Ideal q_ideal = Ideal::parse("y, z", ring);

  // (i) preconditions in A
  const bool radical_maximal = is_radical_maximal(p + q_ideal);
  const unsigned dim_a = krull_dim(Ideal::zero(ring));
  const unsigned dim_p = krull_dim(p);
  const unsigned dim_q = krull_dim(q_ideal);
  r.set("radical_p_plus_q_maximal", radical_maximal);
  r.set("dim_A", as_int(dim_a));
  r.set("dim_A_mod_p", as_int(dim_p));
  r.set("dim_A_mod_q", as_int(dim_q));
  r.set("dim_sum_is_dim_A_plus_1", dim_p + dim_q == dim_a + 1);
  if (!radical_maximal || dim_p + dim_q != dim_a + 1) {
    r.status = Status::PreconditionFailed;
    return r;
  }

  const Polynomial z = P("x^" + M + "*y");
  const AssertedPrime prime(p);
  PowerLadder powers(p);
  const Ideal& p_ms = powers.power(ms);

  // (ii) explicit witness: x^m y^m (z+u)^m = u^(ms) z^m in A, u^(ms) z^m in p^(ms)
  const Polynomial w = P("y^" + M + "*(z+u)^" + M);
  const Polynomial lhs = parse_poly("x^" + M + "*y^" + M + "*(z+u)^" + M, base);
  const Polynomial rhs = parse_poly("u^" + std::to_string(ms) + "*z^" + M, base);
  const Polynomial rel[] = {ring->relation().rebase(base)};
  const bool identity = normal_form(lhs - rhs, rel, MonomialOrder::degrevlex()).remainder.is_zero();
  const bool power_member = p_ms.contains(rhs.rebase(ring));
  const bool outside_p = !prime.contains(w);
  const bool product_member = p_ms.contains(w * z);
  r.set("explicit_witness_identity", identity);
  r.set("explicit_witness_power_member", power_member);
  r.set("explicit_witness_outside_p", outside_p);
  r.set("explicit_witness_times_element_in_power", product_member);
  r.witnesses.emplace_back("explicit_witness", to_input_string(w));
  const SymbolicMembership sm = symbolic_member(z, prime, ms, powers);
  r.set("element_in_p_symbolic", sm.verdict);
  if (sm.verdict) record_symbolic_witness(r, "colon_witness", sm, prime, p_ms);

  // (iii)
  const bool in_q = q_ideal.contains(z);
  r.set("element_in_q", in_q);

  // (iv) c * x^m y outside m^(ms+1) with c = (xy - u^s)^q
  const Polynomial base_element = P("x*y - u^" + S);
  const Polynomial c = base_element.pow(q);
  const Ideal jac = jacobian_ideal(ring);
  const bool in_jacobian = jac.contains(base_element);
  r.set("test_element_base_in_jacobian", in_jacobian);
  r.witnesses.emplace_back("test_element", to_input_string(c));
  const Ideal target = ideal_power(Ideal::maximal(ring), ms + 1);
  const TCProbeResult probe = tc_nonmembership_probe(z, target, c, 0);
  r.assumptions.push_back(probe.assumption + "; its base xy - u^" + S + " generates part of the Jacobian ideal");
  bool probe_fails_at_zero = false;
  if (const auto* fail = std::get_if<NotInTightClosure>(&probe.outcome)) {
    r.set("probe_failing_e", as_int(fail->failing_e));
    r.witnesses.emplace_back("probe_certificate", to_input_string(fail->certificate));
    probe_fails_at_zero = fail->failing_e == 0;
  } else {
    r.set("probe_failing_e", std::int64_t{-1});
  }

  // auxiliary: the leading term and the bracket terms of the expansion
  const Polynomial leading = P("x^" + std::to_string(q + m) + "*y^" + std::to_string(q + 1));
  const bool leading_outside = !target.contains(leading);
  r.set("leading_term_outside_power", leading_outside);
  r.witnesses.emplace_back("leading_term", to_input_string(leading));
  for (unsigned k = 1; k <= q; ++k) {
    // C(q,k) (-1)^k (xy)^(q-k) u^(sk) x^m y, up to the scalar
    const Polynomial term = P("x^" + std::to_string(q - k + m) + "*y^" + std::to_string(q - k + 1) + "*u^" +
                              std::to_string(s * k));
    r.set("bracket_term_" + std::to_string(k) + "_in_power", target.contains(term));
  }

  const bool all = identity && power_member && outside_p && product_member && sm.verdict && in_q &&
                   probe_fails_at_zero && leading_outside;
  r.status = all ? Status::Verified : Status::Counterexample;
  return r;
}

}  // namespace sympow
