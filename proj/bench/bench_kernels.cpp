// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "sympow/groebner.hpp"
#include "sympow/harness.hpp"
#include "sympow/ideal.hpp"
#include "sympow/limits.hpp"
#include "sympow/parser.hpp"

using namespace sympow;

namespace {

std::vector<Polynomial> cyclic4() {
  const Ring r = RingSpec::parse("char=32003; vars=a,b,c,d");
  return parse_poly_list("a+b+c+d, a*b+b*c+c*d+d*a, a*b*c+b*c*d+c*d*a+d*a*b, a*b*c*d-1", r);
}

std::vector<Polynomial> hypersurface_power() {
  const Ring r = RingSpec::parse("char=5; vars=x,y,z,u; rel=x*y*(z+u) - u^3*z");
  return ideal_power(Ideal::maximal(r), 10).generators();
}

void with_threads(benchmark::State& state, auto&& body) {
  Limits lim = limits();
  lim.threads = static_cast<int>(state.range(0));
  LimitsScope scope(lim);
  for (auto _ : state) body();
}

void BM_buchberger_parallel_cyclic4(benchmark::State& state) {
  const auto gens = cyclic4();
  with_threads(state, [&] { benchmark::DoNotOptimize(buchberger(gens)); });
}

void BM_buchberger_reference_cyclic4(benchmark::State& state) {
  const auto gens = cyclic4();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_reference(gens));
}

void BM_buchberger_parallel_m10(benchmark::State& state) {
  const auto gens = hypersurface_power();
  with_threads(state, [&] { benchmark::DoNotOptimize(buchberger(gens)); });
}

void BM_buchberger_reference_m10(benchmark::State& state) {
  const auto gens = hypersurface_power();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_reference(gens));
}

std::vector<std::uint32_t> supports(std::size_t nvars) {
  // supports of x_i*x_{i+1}: a path, whose independence number is ceil(n/2)
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i + 1 < nvars; ++i) out.push_back((1u << i) | (1u << (i + 1)));
  return out;
}

void BM_dimension_parallel(benchmark::State& state) {
  const auto s = supports(16);
  with_threads(state, [&] { benchmark::DoNotOptimize(max_independent_set_size(s, 16)); });
}

void BM_dimension_serial(benchmark::State& state) {
  const auto s = supports(16);
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set_size_serial(s, 16));
}

void BM_check_batch(benchmark::State& state) {
  FamilyParams fp;
  fp.count = 32;
  fp.characteristic = 7;
  const auto instances = gen_family("coordinate", fp);
  with_threads(state, [&] { benchmark::DoNotOptimize(check_batch(instances)); });
}

}  // namespace

BENCHMARK(BM_buchberger_parallel_cyclic4)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_buchberger_reference_cyclic4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_buchberger_parallel_m10)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_buchberger_reference_m10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dimension_parallel)->Arg(1)->Arg(0)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_dimension_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_check_batch)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
