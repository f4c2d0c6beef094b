#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mono/common.hpp"

namespace mono::quad {

using Integrand = std::function<Complex(double)>;

struct Options {
  double abs_tol = 1e-11;
  double rel_tol = 0.0;
  int max_subdivisions = 20000;
};

struct Result {
  Complex value;
  double error = 0.0;
  int evaluations = 0;
};

/// 15-point Gauss-Kronrod rule on [a, b]; `error` is |K15 - G7|.
Result gauss_kronrod_15(const Integrand& f, double a, double b);

/// Globally adaptive G7-K15 over the panels delimited by `cuts` (sorted).
/// Throws NumericalError if the tolerance is not met within the subdivision budget.
Result integrate_panels(const Integrand& f, std::span<const double> cuts, const Options& opt = {});

inline Result integrate(const Integrand& f, double a, double b, const Options& opt = {}) {
  const double cuts[] = {a, b};
  return integrate_panels(f, cuts, opt);
}

/// Integral over (0, 1] with a dyadic mesh graded toward 0.
///
/// Panels [2^-(k+1), 2^-k] are added until their contributions fall below the
/// tolerance; the remaining piece near 0 is extrapolated geometrically, which is
/// exact for integrands behaving like x^p there. `breakpoints` in (0, 1) mark
/// discontinuities of the integrand.
Result integrate_unit_graded(const Integrand& f, std::span<const double> breakpoints = {},
                             const Options& opt = {});

/// Integral over (0, inf) for integrands with at least exponential decay.
/// Panels widen geometrically up to 16 and then stay at width 8; the remaining
/// tail is extrapolated geometrically.
Result integrate_half_line(const Integrand& f, std::span<const double> breakpoints = {},
                           const Options& opt = {}, double t_max = 700.0);

}  // namespace mono::quad
