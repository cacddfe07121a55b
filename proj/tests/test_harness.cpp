#include <doctest.h>

#include "random_gen.hpp"
#include "sympow/errors.hpp"
#include "sympow/harness.hpp"
#include "sympow/parser.hpp"
#include "sympow/report_io.hpp"
#include "sympow/symbolic.hpp"

using namespace sympow;

namespace {

Polynomial P(const std::string& text, const Ring& r) { return parse_poly(text, r); }
Ideal I(const std::string& text, const Ring& r) { return Ideal::parse(text, r); }

ConjectureInstance make(const Ring& r, const std::string& p, const std::string& q, const std::string& f, unsigned m,
                        unsigned n, CheckKind kind) {
  ConjectureInstance inst{r, I(p, r), I(q, r), P(f, r)};
  inst.m = m;
  inst.n = n;
  inst.check = kind;
  return inst;
}

std::int64_t qint(const Report& r, const std::string& name) {
  const Quantity* q = r.get(name);
  REQUIRE(q != nullptr);
  return std::get<std::int64_t>(*q);
}

bool qbool(const Report& r, const std::string& name) {
  const Quantity* q = r.get(name);
  REQUIRE(q != nullptr);
  return std::get<bool>(*q);
}

/// Every witness in a report parses and the symbolic ones re-check.
void recheck_witnesses(const Report& rep, const ConjectureInstance& inst) {
  for (const auto& [name, text] : rep.witnesses) CHECK_NOTHROW(parse_poly(text, inst.ring));
  if (const auto* w = rep.witness("p_symbolic_witness")) {
    const Polynomial s = parse_poly(*w, inst.ring);
    CHECK_FALSE(inst.p.contains(s));
    CHECK(ideal_power(inst.p, inst.m).contains(s * inst.f));
  }
  if (const auto* w = rep.witness("failing_element")) {
    const unsigned n = inst.check == CheckKind::SP1 ? 1 : inst.n;
    CHECK_FALSE(ideal_power(Ideal::maximal(inst.ring), inst.m + n).contains(parse_poly(*w, inst.ring)));
  }
}

}  // namespace

TEST_CASE("SP checks") {
  const Ring r = RingSpec::parse("char=5; vars=x,y,z,w");
  const auto a = make(r, "x, y", "z, w", "x^2*z^3", 2, 3, CheckKind::SP2);
  const Report ra = check_sp(a);
  CHECK(ra.status == Status::Verified);
  CHECK(qbool(ra, "f_in_maximal_power"));
  CHECK(qint(ra, "dim_R_mod_p") + qint(ra, "dim_R_mod_q") == 4);
  recheck_witnesses(ra, a);

  const Ring r3 = RingSpec::parse("char=0; vars=x,y,z");
  const Report rb = check_sp(make(r3, "x", "y", "x*y", 1, 1, CheckKind::SP1));
  CHECK(rb.status == Status::PreconditionFailed);
  CHECK_FALSE(qbool(rb, "radical_p_plus_q_maximal"));

  const Report rc = check_sp(make(r, "x, y", "z, w", "x*z", 1, 1, CheckKind::SP1));
  CHECK(rc.status == Status::Verified);

  // f outside the hypothesis set
  CHECK(check_sp(make(r, "x, y", "z, w", "x*z", 2, 1, CheckKind::SP1)).status == Status::Vacuous);
  CHECK_THROWS_AS(check_sp(make(r, "x, y", "z, w", "x*z", 1, 1, CheckKind::ID2)), UsageError);
}

TEST_CASE("ID checks") {
  const Ring r = RingSpec::parse("char=5; vars=x,y,z,u");
  const Report a = check_id(make(r, "x, u", "y, z, u", "u", 1, 1, CheckKind::ID2));
  CHECK(a.status == Status::Verified);
  CHECK(qint(a, "eA") == 1);
  CHECK(qint(a, "eAP") == 1);
  CHECK(qint(a, "eAQ") == 1);
  CHECK(qint(a, "dim_A_mod_P") + qint(a, "dim_A_mod_Q") == 3);
  CHECK(qint(a, "dim_A") == 3);

  for (CheckKind kind : {CheckKind::ID2, CheckKind::WeakID2}) {
    const Report b = check_id(make(r, "x, u", "y, z", "x*y*(z+u) - u^3*z", 1, 1, kind));
    CHECK(b.status == Status::Vacuous);
    CHECK(qint(b, "eA") == 3);
    CHECK(qint(b, "dim_sum") == 4);
    CHECK(qint(b, "dim_A") + 1 == 4);
  }
  const Report c = check_id(make(r, "x, u", "y, z", "x*y + z*u", 1, 1, CheckKind::ID1));
  CHECK(c.status == Status::Vacuous);
  CHECK(qint(c, "eA") == 2);
  CHECK(qint(c, "eAP") == 1);

  // f must lie in both primes
  CHECK(check_id(make(r, "x, u", "y, z", "x", 1, 1, CheckKind::ID2)).status == Status::PreconditionFailed);
  // the analytic hypotheses are logged
  bool logged = false;
  for (const auto& s : a.assumptions) logged |= s.find("analytically unramified") != std::string::npos;
  CHECK(logged);
}

TEST_CASE("the hypersurface example") {
  const Report r = kr_example(3, 2, 5);
  CHECK(r.status == Status::Verified);
  CHECK(qint(r, "m") == 3);
  CHECK(qint(r, "ms") == 9);
  CHECK(qbool(r, "explicit_witness_identity"));
  CHECK(qbool(r, "explicit_witness_power_member"));
  CHECK(qbool(r, "element_in_p_symbolic"));
  CHECK(qbool(r, "element_in_q"));
  CHECK(qint(r, "probe_failing_e") == 0);
  CHECK(qbool(r, "leading_term_outside_power"));
  CHECK(r.get("bracket_term_1_in_power") != nullptr);
  CHECK(r.get("bracket_term_2_in_power") != nullptr);
  REQUIRE(r.witness("explicit_witness") != nullptr);
  bool test_element_logged = false;
  for (const auto& a : r.assumptions) test_element_logged |= a.find("test element") != std::string::npos;
  CHECK(test_element_logged);

  CHECK_THROWS_AS(kr_example(4, 2, 5), UsageError);
  CHECK_THROWS_AS(kr_example(2, 2, 5), UsageError);
  CHECK_THROWS_AS(kr_example(3, 2, 0), UsageError);
}

TEST_CASE("families") {
  FamilyParams fp;
  fp.nvars = 4;
  fp.split = 2;
  fp.seed = 9;
  const auto coord = gen_family("coordinate", fp);
  REQUIRE(coord.size() == 1);
  const Ring& r = coord[0].ring;
  CHECK(coord[0].p.equals(Ideal(r, {Polynomial::variable(r, 0), Polynomial::variable(r, 1)})));
  CHECK(coord[0].q.equals(Ideal(r, {Polynomial::variable(r, 2), Polynomial::variable(r, 3)})));
  CHECK(coord[0].seed == 9u);
  CHECK(r->variables() == std::vector<std::string>{"x1", "x2", "x3", "x4"});

  FamilyParams kr;
  kr.s = 3;
  kr.q = 2;
  kr.characteristic = 5;
  kr.check = CheckKind::SP1;
  const auto inst = gen_family("kurano-roberts", kr).at(0);
  CHECK(inst.ring->has_relation());
  CHECK(inst.m == 9);
  CHECK(inst.f == P("x^3*y", inst.ring));
  kr.check.reset();
  const auto id = gen_family("kurano-roberts", kr).at(0);
  CHECK_FALSE(id.ring->has_relation());
  CHECK(id.check == CheckKind::WeakID2);

  const auto curve = gen_family("monomial-curve-345", FamilyParams{}).at(0);
  for (const auto& g : curve.p.generators()) CHECK(oracle::substitute_powers(g, {3, 4, 5}).empty());
  CHECK(curve.p.equals(monomial_curve_345(curve.ring)));
  REQUIRE(curve.separator.has_value());
  CHECK_FALSE(curve.p.contains(*curve.separator));

  CHECK_THROWS_AS(gen_family("nonsense", fp), UsageError);
}

TEST_CASE("families are reproducible per seed") {
  FamilyParams fp;
  fp.count = 4;
  fp.seed = 100;
  const auto a = gen_family("coordinate-hypersurface", fp);
  FamilyParams one = fp;
  one.count = 1;
  one.seed = 102;
  CHECK(gen_family("coordinate-hypersurface", one).at(0).f == a[2].f);
  CHECK(gen_family("coordinate-hypersurface", fp).at(3).f == a[3].f);
}

TEST_CASE("conjecture invariants on generated families") {
  std::vector<ConjectureInstance> all;
  for (std::uint32_t ch : {0u, 7u}) {
    FamilyParams fp;
    fp.characteristic = ch;
    fp.count = 4;
    fp.seed = 500 + ch;
    for (auto& i : gen_family("coordinate", fp)) all.push_back(i);
    fp.overlap = 1;
    fp.nvars = 4;
    fp.split = 2;
    fp.check = CheckKind::WeakID2;
    for (auto& i : gen_family("coordinate-hypersurface", fp)) all.push_back(i);
    fp.check = CheckKind::ID2;
    for (auto& i : gen_family("coordinate-hypersurface", fp)) all.push_back(i);
    FamilyParams curve;
    curve.characteristic = ch;
    curve.count = 2;
    curve.seed = 900 + ch;
    curve.terms = 2;
    curve.n = 1;
    for (auto& i : gen_family("monomial-curve-345", curve)) all.push_back(i);
  }
  const auto reports = check_batch(all);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& inst = all[i];
    const auto& rep = reports[i];
    CAPTURE(i);
    if (inst.check == CheckKind::SP2 && inst.ring->variables().front() == "x1") CHECK(rep.status == Status::Verified);
    if (inst.check == CheckKind::WeakID2) CHECK(rep.status != Status::Counterexample);
    if (inst.check == CheckKind::ID2 && inst.ring->characteristic() > 0) CHECK(rep.status != Status::Counterexample);
    if (const Quantity* serre = rep.get("serre_bound_holds")) CHECK(std::get<bool>(*serre));
    recheck_witnesses(rep, inst);
    CHECK(rep.seed == inst.seed);
  }
}

TEST_CASE("batch checking matches one-at-a-time checking") {
  FamilyParams fp;
  fp.count = 6;
  fp.seed = 77;
  fp.characteristic = 11;
  const auto instances = gen_family("coordinate", fp);
  const auto batch = check_batch(instances);
  for (std::size_t i = 0; i < instances.size(); ++i) CHECK(batch[i] == check(instances[i]));
}

TEST_CASE("instance and report JSON round trips") {
  FamilyParams fp;
  fp.seed = 3;
  fp.characteristic = 13;
  auto inst = gen_family("monomial-curve-345", fp).at(0);
  const auto j = instance_to_json(inst);
  const auto back = instance_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.f == inst.f);
  CHECK(back.p.equals(inst.p));
  CHECK(back.q.equals(inst.q));
  CHECK(back.m == inst.m);
  CHECK(back.check == inst.check);
  CHECK(back.seed == inst.seed);
  REQUIRE(back.separator.has_value());
  CHECK(*back.separator == *inst.separator);
  CHECK(instance_to_json(back).dump() == j.dump());

  const Report rep = kr_example(3, 2, 5);
  const auto rj = report_to_json(rep);
  for (const char* key : {"status", "quantities", "witnesses", "assumptions", "seed", "toolkit_version"})
    CHECK(rj.contains(key));
  CHECK(rj.size() == 6);
  const Report rb = parse_report(rj.dump(2));
  CHECK(rb == rep);
  CHECK(report_to_json(rb).dump() == rj.dump());

  CHECK_THROWS_AS(parse_instance(R"({"ring": {"characteristic": 0, "variables": ["x"], "relation": null},
      "p": ["x"], "q": ["x"], "f": "x", "m": 1, "n": 1, "check": "SP1", "colour": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"ring": {"characteristic": 0, "variables": ["x"]},
      "p": ["y"], "q": ["x"], "f": "x", "m": 1, "n": 1, "check": "SP1"})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("{not json"), ParseError);
  CHECK_THROWS_AS(parse_report(R"({"status": "MAYBE", "quantities": {}, "witnesses": {}, "assumptions": [],
      "seed": null, "toolkit_version": "0"})"),
                  ParseError);
}
