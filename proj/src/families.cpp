#include "sympow/harness.hpp"

#include <random>

#include "sympow/errors.hpp"
#include "sympow/parser.hpp"
#include "sympow/symbolic.hpp"

namespace sympow {

namespace {

using Rng = std::mt19937_64;

Rng instance_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
  return Rng(seq);
}

Field field_for(std::uint32_t characteristic) { return Field::of_characteristic(characteristic); }

long long random_coeff(Rng& rng) {
  std::uniform_int_distribution<int> dist(1, 5);
  std::bernoulli_distribution sign(0.5);
  const long long c = dist(rng);
  return sign(rng) ? -c : c;
}

/// Random monomial of total degree exactly `degree` in the listed variables.
Monomial random_monomial(Rng& rng, std::size_t nvars, const std::vector<std::size_t>& vars, unsigned degree) {
  Monomial m(nvars);
  if (vars.empty()) return m;
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::vector<std::uint32_t> e(nvars, 0);
  for (unsigned i = 0; i < degree; ++i) ++e[vars[pick(rng)]];
  return Monomial(std::span<const std::uint32_t>(e));
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

Ideal coordinate_ideal(const Ring& ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> gens;
  for (std::size_t i : vars) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, gens);
}

/// Sum of `terms` random multiples c * g * u with g drawn from `gens` and u
/// a monomial of degree at most `extra`. Nonzero.
Polynomial random_combination(Rng& rng, const Ring& ring, const std::vector<Polynomial>& gens, unsigned terms,
                              unsigned extra) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, extra);
  const auto all = range(0, ring->nvars());
  for (;;) {
    Polynomial f = Polynomial::zero(ring);
    for (unsigned t = 0; t < std::max(1u, terms); ++t) {
      const Polynomial u = Polynomial::monomial(ring, random_monomial(rng, ring->nvars(), all, deg(rng)));
      f = f + (gens[pick(rng)] * u).scaled(FieldScalar::from_int(random_coeff(rng), ring->field()));
    }
    if (!f.is_zero()) return f;
  }
}

std::vector<std::string> indexed_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

ConjectureInstance coordinate(const FamilyParams& fp, std::uint64_t seed) {
  if (fp.split == 0 || fp.split >= fp.nvars) throw UsageError("coordinate family needs 0 < split < nvars");
  Rng rng = instance_rng(seed);
  const Ring ring = RingSpec::create(indexed_names(fp.nvars), field_for(fp.characteristic));
  const auto pv = range(0, fp.split);
  const auto qv = range(fp.split, fp.nvars);
  const auto all = range(0, fp.nvars);
  std::uniform_int_distribution<unsigned> deg(0, fp.extra_degree);
  ConjectureInstance inst{ring, coordinate_ideal(ring, pv), coordinate_ideal(ring, qv), Polynomial::zero(ring)};
  inst.m = fp.m;
  inst.n = fp.n;
  inst.check = fp.check.value_or(CheckKind::SP2);
  const unsigned n_exp = inst.check == CheckKind::SP1 ? 1 : fp.n;
  while (inst.f.is_zero()) {
    for (unsigned t = 0; t < std::max(1u, fp.terms); ++t) {
      const Monomial mono = random_monomial(rng, fp.nvars, pv, fp.m) * random_monomial(rng, fp.nvars, qv, n_exp) *
                            random_monomial(rng, fp.nvars, all, deg(rng));
      inst.f = inst.f + Polynomial::monomial(ring, mono).scaled(FieldScalar::from_int(random_coeff(rng), ring->field()));
    }
  }
  inst.seed = seed;
  return inst;
}

ConjectureInstance coordinate_hypersurface(const FamilyParams& fp, std::uint64_t seed) {
  if (fp.split == 0 || fp.split >= fp.nvars) throw UsageError("coordinate-hypersurface family needs 0 < split < nvars");
  if (fp.overlap >= fp.split) throw UsageError("coordinate-hypersurface family needs overlap < split");
  Rng rng = instance_rng(seed);
  const Ring ring = RingSpec::create(indexed_names(fp.nvars), field_for(fp.characteristic));
  const auto pv = range(0, fp.split);
  const auto qv = range(fp.split - fp.overlap, fp.nvars);
  // generators of p cap q for coordinate primes
  std::vector<Polynomial> meet;
  for (std::size_t i = fp.split - fp.overlap; i < fp.split; ++i) meet.push_back(Polynomial::variable(ring, i));
  for (std::size_t i = 0; i + fp.overlap < fp.split; ++i)
    for (std::size_t j = fp.split; j < fp.nvars; ++j)
      meet.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, j));
  ConjectureInstance inst{ring, coordinate_ideal(ring, pv), coordinate_ideal(ring, qv),
                          random_combination(rng, ring, meet, fp.terms, fp.extra_degree)};
  inst.check = fp.check.value_or(CheckKind::ID2);
  inst.m = fp.m;
  inst.n = fp.n;
  inst.seed = seed;
  return inst;
}

ConjectureInstance curve_345(const FamilyParams& fp, std::uint64_t seed) {
  Rng rng = instance_rng(seed);
  const Ring ring = RingSpec::create({"x", "y", "z"}, field_for(fp.characteristic));
  const Ideal p = monomial_curve_345(ring);
  const Polynomial x = Polynomial::variable(ring, 0);
  const CheckKind kind = fp.check.value_or(CheckKind::SP2);
  const unsigned n_exp = kind == CheckKind::SP1 ? 1 : fp.n;
  const SymbolicPowerCandidate cand = symbolic_power_candidate(AssertedPrime(p), fp.m, x);
  ConjectureInstance inst{ring, p, Ideal(ring, {x}), Polynomial::zero(ring)};
  inst.f = random_combination(rng, ring, cand.ideal.generators(), fp.terms, fp.extra_degree) * x.pow(n_exp);
  inst.check = kind;
  inst.m = fp.m;
  inst.n = fp.n;
  inst.separator = x;
  inst.seed = seed;
  return inst;
}

ConjectureInstance kurano_roberts(const FamilyParams& fp) {
  if (fp.s < 3 || (2 * fp.q) % (fp.s - 1) != 0) throw UsageError("kurano-roberts family needs s >= 3 and (s-1) | 2q");
  const std::string S = std::to_string(fp.s);
  const std::string equation = "x*y*(z+u) - u^" + S + "*z";
  const CheckKind kind = fp.check.value_or(CheckKind::WeakID2);
  const Field field = field_for(fp.characteristic);
  if (kind == CheckKind::SP1 || kind == CheckKind::SP2) {
    const Ring ring = RingSpec::create({"x", "y", "z", "u"}, field, equation);
    const unsigned m = 2 * fp.q / (fp.s - 1) + 1;
    ConjectureInstance inst{ring, Ideal::parse("x, u", ring), Ideal::parse("y, z", ring),
                            parse_poly("x^" + std::to_string(m) + "*y", ring)};
    inst.m = m * fp.s;
    inst.n = 1;
    inst.check = kind;
    return inst;
  }
  const Ring ring = RingSpec::create({"x", "y", "z", "u"}, field);
  ConjectureInstance inst{ring, Ideal::parse("x, u", ring), Ideal::parse("y, z", ring), parse_poly(equation, ring)};
  inst.check = kind;
  return inst;
}

}  // namespace

Ideal monomial_curve_345(const Ring& ring) {
  if (ring->nvars() != 3) throw UsageError("monomial_curve_345 needs a ring in three variables");
  const auto x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1), z = Polynomial::variable(ring, 2);
  return Ideal(ring, {x.pow(3) - y * z, y.pow(2) - x * z, z.pow(2) - x.pow(2) * y});
}

std::vector<ConjectureInstance> gen_family(const std::string& name, const FamilyParams& params) {
  std::vector<ConjectureInstance> out;
  if (name == "kurano-roberts") {
    for (std::size_t i = 0; i < params.count; ++i) out.push_back(kurano_roberts(params));
    return out;
  }
  ConjectureInstance (*make)(const FamilyParams&, std::uint64_t) = nullptr;
  if (name == "coordinate") make = coordinate;
  else if (name == "coordinate-hypersurface") make = coordinate_hypersurface;
  else if (name == "monomial-curve-345") make = curve_345;
  else throw UsageError("unknown family '" + name + "'");
  for (std::size_t i = 0; i < params.count; ++i) out.push_back(make(params, params.seed + i));
  return out;
}

}  // namespace sympow
