#include "mono/sarason/transform.hpp"

#include <algorithm>
#include <cmath>

namespace mono {

DiskFunction forward_monomial(const Exponent& beta) {
  if (beta.logpow() > 0) return DiskFunction(MonomialImage{{{1.0, beta}}});
  const Complex b = beta.value();
  const Complex alpha = std::conj(b) / (std::conj(b) + 1.0);
  return DiskFunction(KernelCombination{{{1.0 / (b + 1.0), alpha}}});
}

DiskFunction forward_indicator(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("indicator endpoint must lie in (0, 1]");
  SingularInnerFactor f;
  f.scale = std::sqrt(s);
  if (s < 1.0) f.atoms.push_back({1.0, -0.5 * std::log(s)});
  return DiskFunction(f);
}

TransformValue forward_quadrature(const SampledFunction& f, DiskPoint zp, const quad::Options& opt) {
  const Complex z = zp.z();
  const Complex p = z / (1.0 - z);
  const auto r = quad::integrate_unit_graded(
      [&](double x) { return f(x) * std::exp(p * std::log(x)); }, f.breakpoints, opt);
  const Complex scale = 1.0 / (1.0 - z);
  return {scale * r.value, std::abs(scale) * r.error};
}

TransformValue laplace_bridge(const SampledFunction& f, DiskPoint zp, const quad::Options& opt) {
  const Complex z = zp.z();
  const Complex sigma = 0.5 * (1.0 + z) / (1.0 - z);
  std::vector<double> cuts;
  for (double x : f.breakpoints) cuts.push_back(-std::log(x));
  std::sort(cuts.begin(), cuts.end());
  const auto r = quad::integrate_half_line(
      [&](double t) { return std::exp(-0.5 * t - sigma * t) * f(std::exp(-t)); }, cuts, opt);
  const Complex scale = 1.0 / (1.0 - z);
  return {scale * r.value, std::abs(scale) * r.error};
}

ScaledMonomial inverse_kernel(DiskPoint alpha) {
  const Complex ac = std::conj(alpha.z());
  return {1.0 / (1.0 - ac), Exponent(ac / (1.0 - ac))};
}

ScaledMonomial reflect_kernel_inverse(DiskPoint alpha) { return inverse_kernel(DiskPoint(-alpha.z())); }

std::vector<Complex> kernel_derivatives_at_1(Complex alpha, std::size_t n) {
  if (!(std::abs(alpha) < 1.0)) throw DomainError("kernel parameter must lie in the open disk");
  std::vector<Complex> d(n);
  const Complex ac = std::conj(alpha);
  Complex v = 1.0 / (1.0 - ac);
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v;
    v *= double(j + 1) * ac / (1.0 - ac);
  }
  return d;
}

SeriesValue inverse_series(const std::vector<Complex>& d, Complex w, std::optional<CauchyBound> bound,
                           double tol) {
  if (bound && !(bound->m >= 0.0 && bound->r > 0.0))
    throw DomainError("Cauchy bound needs m >= 0 and r > 0");
  SeriesValue out;
  out.rigorous = bound.has_value();
  const double rho = bound ? std::abs(w) / bound->r : 0.0;
  Complex power = 1.0;  // w^j / (j!)^2
  double log_tail = 0.0;  // log of rho^(j+1) / (j+1)!
  double prev = 0.0, last = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j > 0) power *= w / (double(j) * double(j));
    const Complex term = d[j] * power;
    out.value += term;
    out.terms_used = j + 1;
    prev = last;
    last = std::abs(term);
    const double scale = std::max(std::abs(out.value), 1e-300);
    if (bound) {
      log_tail += std::log(rho) - std::log(double(j + 1));
      out.tail_bound = rho == 0.0 ? 0.0 : bound->m * std::exp(log_tail + rho);
      if (out.tail_bound <= tol * scale) return out;
    } else {
      out.tail_bound = 2.0 * last;
      if (j > 0 && last <= tol * scale && prev <= tol * scale) return out;
    }
  }
  const double scale = std::max(1.0, std::abs(out.value));
  out.divergence_warning = out.tail_bound > 1e-10 * scale || (d.size() > 1 && last >= prev && last > 0.0);
  return out;
}

SeriesValue inverse_analytic(const std::vector<Complex>& d, Complex x, std::optional<CauchyBound> bound) {
  if (x.imag() == 0.0 && !(x.real() > 0.0))
    throw DomainError("inverse transform is continued only to C minus (-inf, 0]");
  return inverse_series(d, std::log(x), bound);
}

SeriesValue inverse_analytic_reflected_as_stated(const std::vector<Complex>& d, double x,
                                                 std::optional<CauchyBound> bound) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("evaluation point must lie in (0, 1]");
  return inverse_series(d, -std::log(x), bound);
}

std::vector<Complex> moment_interpolation(const std::vector<Complex>& w, MomentDirection dir) {
  std::vector<Complex> out(w.size());
  for (std::size_t n = 0; n < w.size(); ++n)
    out[n] = dir == MomentDirection::MomentsToValues ? w[n] * double(n + 1) : w[n] / double(n + 1);
  return out;
}

}  // namespace mono
