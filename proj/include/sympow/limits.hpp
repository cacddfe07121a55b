#pragma once

#include <cstddef>

namespace sympow {

/// Resource caps shared by every computation. Exceeding one raises
/// CapExceeded naming the cap.
struct Limits {
  std::size_t max_basis = 20000;          // polynomials created by one Buchberger run
  std::size_t max_terms = 1'000'000;      // terms in any intermediate polynomial
  unsigned symbolic_order_cap = 50;
  unsigned hilbert_degree_cap = 60;
  unsigned saturation_iterations = 100;
  std::size_t max_power_generators = 100000;
  std::size_t dimension_variable_cap = 16;
  int threads = 0;                        // 0: OpenMP default
};

/// Limits in effect on the calling thread.
const Limits& limits();

/// Overrides limits() on this thread for the guard's lifetime.
class LimitsScope {
 public:
  explicit LimitsScope(const Limits& l);
  ~LimitsScope();
  LimitsScope(const LimitsScope&) = delete;
  LimitsScope& operator=(const LimitsScope&) = delete;

 private:
  Limits value_;
  const Limits* previous_;
};

}  // namespace sympow
