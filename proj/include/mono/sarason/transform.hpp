#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mono/core/scaled_monomial.hpp"
#include "mono/quadrature.hpp"
#include "mono/sarason/disk.hpp"
#include "mono/sarason/sampled.hpp"

namespace mono {

/// U(x^b (ln x)^k). For k = 0 this is (1/(b+1)) k_alpha with alpha = conj(b)/(conj(b)+1);
/// for k > 0 the image is returned as a MonomialImage.
DiskFunction forward_monomial(const Exponent& beta);

/// U chi_[0,s] = sqrt(s) S_{1, -ln(s)/2}, for 0 < s <= 1.
DiskFunction forward_indicator(double s);

struct TransformValue {
  Complex value;
  double error = 0.0;
};

/// Uf(z) = 1/(1-z) int_0^1 f(x) x^(z/(1-z)) dx by graded adaptive quadrature.
TransformValue forward_quadrature(const SampledFunction& f, DiskPoint z,
                                  const quad::Options& opt = {});

/// Uf(z) = 1/(1-z) L[f~](sigma), sigma = (1+z) / (2(1-z)), f~(t) = e^(-t/2) f(e^-t).
TransformValue laplace_bridge(const SampledFunction& f, DiskPoint z, const quad::Options& opt = {});

/// U* k_alpha = c x^s with c = 1/(1 - conj alpha), s = conj alpha / (1 - conj alpha).
ScaledMonomial inverse_kernel(DiskPoint alpha);

/// Cauchy estimate |f^(j)(1)| <= m j! / r^j used for the truncation bound.
struct CauchyBound {
  double m;
  double r;
};

struct SeriesValue {
  Complex value;
  /// Bound on the neglected tail: rigorous when a CauchyBound was supplied,
  /// otherwise twice the last retained term.
  double tail_bound = 0.0;
  bool rigorous = false;
  std::size_t terms_used = 0;
  /// Terms had not started to decrease when the input list ran out.
  bool divergence_warning = false;
};

/// F(w) = sum_j f^(j)(1) w^j / (j!)^2. The sum stops early once the Cauchy tail
/// bound (or the size of the terms) drops below `tol` relative to the partial sum.
SeriesValue inverse_series(const std::vector<Complex>& derivs_at_1, Complex w,
                           std::optional<CauchyBound> bound = std::nullopt, double tol = 1e-17);

/// (U* f)(x) = F(ln x); complex x uses the principal logarithm, which continues
/// U* f holomorphically to C minus (-inf, 0].
SeriesValue inverse_analytic(const std::vector<Complex>& derivs_at_1, Complex x,
                             std::optional<CauchyBound> bound = std::nullopt);

/// F(ln(1/x)), the reflected formula in the form it is usually stated. It does not
/// agree with U*(f(-z)); see `reflect_kernel_inverse` for the relation that holds.
SeriesValue inverse_analytic_reflected_as_stated(const std::vector<Complex>& derivs_at_1, double x,
                                                 std::optional<CauchyBound> bound = std::nullopt);

/// U*(k_alpha(-z)) = U* k_{-alpha} = (1/(1 + conj alpha)) x^(-conj alpha / (1 + conj alpha)).
ScaledMonomial reflect_kernel_inverse(DiskPoint alpha);

/// f^(j)(1) for j < n of f = k_alpha: j! conj(alpha)^j / (1 - conj alpha)^(j+1).
std::vector<Complex> kernel_derivatives_at_1(Complex alpha, std::size_t n);

enum class MomentDirection { MomentsToValues, ValuesToMoments };

/// Moments w_n = <f, x^n> map to Uf(n/(n+1)) = (n+1) w_n, and back.
std::vector<Complex> moment_interpolation(const std::vector<Complex>& w, MomentDirection dir);

}  // namespace mono
