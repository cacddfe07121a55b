#include <algorithm>
#include <bit>
#include <vector>

#include <omp.h>

#include "sympow/errors.hpp"
#include "sympow/ideal.hpp"
#include "sympow/limits.hpp"

namespace sympow {

namespace {

// Supports not containing another support; duplicates removed.
std::vector<std::uint32_t> minimal_supports(std::span<const std::uint32_t> supports) {
  std::vector<std::uint32_t> s(supports.begin(), supports.end());
  std::sort(s.begin(), s.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t x : s)
    if (std::none_of(out.begin(), out.end(), [&](std::uint32_t m) { return (m & ~x) == 0; })) out.push_back(x);
  return out;
}

bool independent(std::uint32_t subset, const std::vector<std::uint32_t>& supports) {
  for (std::uint32_t s : supports)
    if ((s & ~subset) == 0) return false;
  return true;
}

void check_size(std::size_t nvars) {
  if (nvars > limits().dimension_variable_cap)
    throw UsageError("dimension search is capped at " + std::to_string(limits().dimension_variable_cap) + " variables");
}

}  // namespace

unsigned max_independent_set_size(std::span<const std::uint32_t> leading_supports, std::size_t nvars) {
  check_size(nvars);
  const std::vector<std::uint32_t> supports = minimal_supports(leading_supports);
  const long total = 1L << nvars;
  int best = -1;
  const int threads = limits().threads > 0 ? limits().threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) reduction(max : best) num_threads(threads) if (total > 4096)
  for (long subset = 0; subset < total; ++subset) {
    const auto s = static_cast<std::uint32_t>(subset);
    const int size = std::popcount(s);
    if (size > best && independent(s, supports)) best = size;
  }
  if (best < 0) throw NotProper("ideal contains 1");
  return static_cast<unsigned>(best);
}

unsigned max_independent_set_size_serial(std::span<const std::uint32_t> leading_supports, std::size_t nvars) {
  check_size(nvars);
  const std::vector<std::uint32_t> supports(leading_supports.begin(), leading_supports.end());
  for (std::size_t size = nvars + 1; size-- > 0;) {
    for (std::uint32_t subset = 0; subset < (1u << nvars); ++subset)
      if (static_cast<std::size_t>(std::popcount(subset)) == size && independent(subset, supports))
        return static_cast<unsigned>(size);
  }
  throw NotProper("ideal contains 1");
}

unsigned krull_dim(const Ideal& ideal) {
  const GroebnerBasis& gb = ideal.basis(MonomialOrder::degrevlex());
  if (gb.is_unit()) throw NotProper("krull_dim: ideal contains 1");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.generators()) supports.push_back(g.lead_monomial().support());
  return max_independent_set_size(supports, ideal.ring()->nvars());
}

}  // namespace sympow
