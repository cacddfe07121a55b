#include <doctest.h>

#include "random_gen.hpp"
#include "sympow/charp.hpp"
#include "sympow/errors.hpp"
#include "sympow/limits.hpp"
#include "sympow/parser.hpp"

using namespace sympow;

namespace {

Polynomial P(const std::string& text, const Ring& r) { return parse_poly(text, r); }
Ideal I(const std::string& text, const Ring& r) { return Ideal::parse(text, r); }

}  // namespace

TEST_CASE("frobenius powers") {
  const Ring r5 = RingSpec::parse("char=5; vars=x,y");
  CHECK(frobenius_power(I("x, y", r5), 1).equals(I("x^5, y^5", r5)));
  CHECK(frobenius_power(I("x + y, x*y", r5), 0).equals(I("x + y, x*y", r5)));
  const Ring r2 = RingSpec::parse("char=2; vars=x,y");
  CHECK(frobenius(P("x + y", r2), 1) == P("x^2 + y^2", r2));
  CHECK(frobenius(P("x + y", r2), 1) == P("x + y", r2).pow(2));
  CHECK(frobenius(P("3*x*y + 2", r5), 2) == P("3*x^25*y^25 + 2", r5));
  const Ring q = RingSpec::parse("char=0; vars=x");
  CHECK_THROWS_AS(frobenius_power(I("x", q), 1), UsageError);
  CHECK_THROWS_AS(frobenius(P("x", RingSpec::parse("char=2147483647; vars=x")), 1), CapExceeded);

  // the relation stays unraised
  const Ring a = RingSpec::parse("char=3; vars=x,y; rel=x*y");
  const Ideal F = frobenius_power(I("x + y", a), 1);
  CHECK(F.contains(P("x^3 + y^3", a)));
  CHECK(F.contains(P("x*y", a)));
  CHECK_FALSE(F.contains(P("x + y", a)));
}

TEST_CASE("frobenius is exponent-additive and distributes over sums") {
  testgen::Rng rng(67);
  for (std::uint32_t p : {2u, 3u}) {
    for (int i = 0; i < 15; ++i) {
      const Ring r = testgen::ring_of(3, p);
      std::vector<Polynomial> a, b;
      a.push_back(testgen::random_nonzero_poly(rng, r, 2, 2));
      a.push_back(testgen::random_nonzero_poly(rng, r, 1, 2));
      b.push_back(testgen::random_nonzero_poly(rng, r, 2, 2));
      const Ideal A(r, a), B(r, b);
      CHECK(frobenius_power(A, 2).equals(frobenius_power(frobenius_power(A, 1), 1)));
      CHECK(frobenius_power(A + B, 1).equals(frobenius_power(A, 1) + frobenius_power(B, 1)));
      for (const auto& g : a) CHECK(frobenius(g, 1) == g.pow(p));
    }
  }
}

TEST_CASE("jacobian ideals") {
  const Ring a = RingSpec::parse("char=5; vars=x,y,z,u; rel=x*y*(z+u) - u^3*z");
  const Ideal J = jacobian_ideal(a);
  CHECK(J.equals(I("y*(u+z), x*(u+z), x*y - 3*u^2*z, x*y - u^3", a)));
  REQUIRE(J.generators().size() >= 3);
  CHECK(J.contains(P("x*y - u^3", a)));

  const Ring b = RingSpec::parse("char=3; vars=x,y; rel=x^2");
  CHECK(jacobian_ideal(b).equals(I("x", b)));
  const Ring c = RingSpec::parse("char=3; vars=x,y; rel=x^3");
  CHECK(jacobian_ideal(c).generators().empty());
  CHECK_THROWS_AS(jacobian_ideal(RingSpec::parse("char=3; vars=x")), UsageError);
}

TEST_CASE("formal derivatives obey the Leibniz rule") {
  testgen::Rng rng(71);
  for (std::uint32_t p : {0u, 5u}) {
    const Ring r = testgen::ring_of(3, p);
    for (int i = 0; i < 30; ++i) {
      const Polynomial f = testgen::random_poly(rng, r, 3, 3), g = testgen::random_poly(rng, r, 3, 3);
      for (std::size_t v = 0; v < 3; ++v)
        CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
  }
}

TEST_CASE("tight closure probe") {
  const Ring a = RingSpec::parse("char=5; vars=x,y,z,u; rel=x*y*(z+u) - u^3*z");
  const Ideal m10 = ideal_power(I("x, y, z, u", a), 10);
  const TCProbeResult res = tc_nonmembership_probe(P("x^3*y", a), m10, P("(x*y - u^3)^2", a), 1);
  REQUIRE(res.not_in_tight_closure());
  const auto& fail = std::get<NotInTightClosure>(res.outcome);
  CHECK(fail.failing_e == 0);
  CHECK_FALSE(fail.certificate.is_zero());
  CHECK_FALSE(m10.contains(fail.certificate));
  CHECK(m10.contains(P("(x*y - u^3)^2 * x^3*y", a) - fail.certificate));
  CHECK(res.assumption.find("test element") != std::string::npos);

  const Ring xy = RingSpec::parse("char=3; vars=x,y");
  const auto inside = tc_nonmembership_probe(P("x", xy), I("x", xy), P("1", xy), 2);
  REQUIRE_FALSE(inside.not_in_tight_closure());
  CHECK(std::get<ConsistentUpTo>(inside.outcome).E == 2);
  const auto outside = tc_nonmembership_probe(P("y", xy), I("x", xy), P("1", xy), 0);
  REQUIRE(outside.not_in_tight_closure());
  CHECK(std::get<NotInTightClosure>(outside.outcome).failing_e == 0);

  CHECK_THROWS_AS(tc_nonmembership_probe(P("x", xy), I("x", xy), P("0", xy), 1), UsageError);
}

TEST_CASE("members are never flagged by the probe") {
  testgen::Rng rng(73);
  const Ring r = testgen::ring_of(2, 3);
  for (int i = 0; i < 15; ++i) {
    const Ideal J(r, {testgen::random_nonzero_poly(rng, r, 2, 2), testgen::random_nonzero_poly(rng, r, 2, 2)});
    if (J.is_unit()) continue;
    const Polynomial z = J.generators()[0] * testgen::random_nonzero_poly(rng, r, 2, 1);
    const Polynomial c = testgen::random_nonzero_poly(rng, r, 2, 2);
    for (unsigned E = 0; E <= 2; ++E) CHECK_FALSE(tc_nonmembership_probe(z, J, c, E).not_in_tight_closure());
  }
}

TEST_CASE("probe reports the last completed e when a cap stops it") {
  const Ring r = RingSpec::parse("char=101; vars=x,y");
  try {
    tc_nonmembership_probe(P("x", r), I("x", r), P("1", r), 3);
    FAIL("expected a cap");
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("last completed e") != std::string::npos);
  }
}
