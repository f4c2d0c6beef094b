#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mono/common.hpp"

namespace mono {

/// Function on (0, 1] given by an evaluator. The evaluator must be reentrant.
struct SampledFunction {
  std::function<Complex(double)> eval;
  /// Points of (0, 1) where the function or a derivative jumps.
  std::vector<double> breakpoints;
  /// Set when f is unbounded near 0 (still square integrable).
  bool singular_at_zero = false;
  std::optional<double> norm_sq;

  Complex operator()(double x) const { return eval(x); }
};

}  // namespace mono
