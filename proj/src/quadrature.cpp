#include "mono/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace mono::quad {
namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  Complex value;
  double error;
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

Complex checked(const Integrand& f, double x) {
  const Complex v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NumericalError("quadrature: integrand is not finite at x = " + std::to_string(x));
  return v;
}

double tolerance(const Options& opt, Complex total) {
  return std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
}

}  // namespace

Result gauss_kronrod_15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = checked(f, center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = checked(f, center - dx);
    const Complex f2 = checked(f, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half), 15};
}

Result integrate_panels(const Integrand& f, std::span<const double> cuts, const Options& opt) {
  std::priority_queue<Segment, std::vector<Segment>, ByError> queue;
  Result out;
  Complex total{};
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    const Result r = gauss_kronrod_15(f, cuts[i], cuts[i + 1]);
    out.evaluations += r.evaluations;
    queue.push({cuts[i], cuts[i + 1], r.value, r.error});
    total += r.value;
    total_error += r.error;
  }
  int splits = 0;
  while (!queue.empty() && total_error > tolerance(opt, total)) {
    if (splits++ >= opt.max_subdivisions)
      throw NumericalError("quadrature: subdivision budget exhausted (error estimate " +
                           std::to_string(total_error) + ")");
    const Segment worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval at machine resolution
    queue.pop();
    const Result left = gauss_kronrod_15(f, worst.a, mid);
    const Result right = gauss_kronrod_15(f, mid, worst.b);
    out.evaluations += left.evaluations + right.evaluations;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.value, left.error});
    queue.push({mid, worst.b, right.value, right.error});
  }
  // Re-sum in positional order so the reduction does not depend on heap layout.
  std::vector<Segment> segments;
  segments.reserve(queue.size());
  while (!queue.empty()) {
    segments.push_back(queue.top());
    queue.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  out.value = Complex{};
  out.error = 0.0;
  for (const auto& s : segments) {
    out.value += s.value;
    out.error += s.error;
  }
  if (out.error > tolerance(opt, out.value))
    throw NumericalError("quadrature: tolerance not reached (error estimate " +
                         std::to_string(out.error) + ")");
  return out;
}

namespace {

// Shared driver for the graded meshes: `edges` is consumed in order, moving
// away from the non-compact end; `stop_after` is the first index from which the
// decay test is allowed to stop the sweep.
struct Sweep {
  std::vector<double> cuts;
  Complex tail{};
  double tail_error = 0.0;
  int evaluations = 0;
};

Sweep sweep_panels(const Integrand& f, const std::vector<double>& edges,
                   std::span<const double> breakpoints, std::size_t stop_after, double stop_tol) {
  Sweep s;
  s.cuts.push_back(edges.front());
  Complex prev{}, last{};
  Complex ratio{}, prev_ratio{};
  bool have_ratio = false, have_prev_ratio = false;
  int quiet = 0;
  std::size_t used = 0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double lo = std::min(edges[k], edges[k + 1]);
    const double hi = std::max(edges[k], edges[k + 1]);
    std::vector<double> local = {lo, hi};
    for (double b : breakpoints)
      if (b > lo && b < hi) local.push_back(b);
    std::sort(local.begin(), local.end());
    Complex panel{};
    for (std::size_t i = 0; i + 1 < local.size(); ++i) {
      const Result r = gauss_kronrod_15(f, local[i], local[i + 1]);
      panel += r.value;
      s.evaluations += r.evaluations;
    }
    const bool ascending = edges[k + 1] > edges[k];
    if (ascending) {
      for (std::size_t i = 1; i < local.size(); ++i) s.cuts.push_back(local[i]);
    } else {
      for (std::size_t i = local.size() - 1; i-- > 0;) s.cuts.push_back(local[i]);
    }
    prev = last;
    last = panel;
    used = k + 1;
    if (std::abs(prev) > 0.0) {
      prev_ratio = ratio;
      have_prev_ratio = have_ratio;
      ratio = last / prev;
      have_ratio = true;
    } else {
      have_ratio = have_prev_ratio = false;
    }
    quiet = std::abs(panel) < stop_tol ? quiet + 1 : 0;
    if (k >= stop_after && quiet >= 4) break;
  }
  // Geometric extrapolation of the remaining panels: sum_{j>=1} last * ratio^j.
  if (std::abs(last) > 0.0 && have_ratio && std::abs(ratio) < 1.0) {
    const Complex one_minus = 1.0 - ratio;
    s.tail = last * ratio / one_minus;
    s.tail_error = have_prev_ratio
                       ? std::abs(last) * std::abs(ratio - prev_ratio) / std::norm(one_minus)
                       : std::abs(s.tail);
  } else if (std::abs(last) > 0.0) {
    s.tail_error = std::abs(last) * 1e3;  // no decay observed
  }
  if (used + 1 == edges.size() && std::abs(last) >= stop_tol)
    s.tail_error = std::max(s.tail_error, std::abs(last) * 1e-6);
  std::sort(s.cuts.begin(), s.cuts.end());
  return s;
}

}  // namespace

Result integrate_unit_graded(const Integrand& f, std::span<const double> breakpoints,
                             const Options& opt) {
  std::vector<double> edges;
  for (int k = 0; k <= 1060; ++k) edges.push_back(std::ldexp(1.0, -k));
  const Sweep sweep = sweep_panels(f, edges, breakpoints, 6, 1e-3 * opt.abs_tol);
  Options inner = opt;
  inner.abs_tol = std::max(0.5 * opt.abs_tol, opt.abs_tol - sweep.tail_error);
  Result r = integrate_panels(f, sweep.cuts, inner);
  r.value += sweep.tail;
  r.error += sweep.tail_error;
  r.evaluations += sweep.evaluations;
  if (r.error > std::max(opt.abs_tol, opt.rel_tol * std::abs(r.value)))
    throw NumericalError("quadrature: graded tail did not converge (error estimate " +
                         std::to_string(r.error) + ")");
  return r;
}

Result integrate_half_line(const Integrand& f, std::span<const double> breakpoints,
                           const Options& opt, double t_max) {
  std::vector<double> edges = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  while (edges.back() + 8.0 <= t_max) edges.push_back(edges.back() + 8.0);
  const Sweep sweep = sweep_panels(f, edges, breakpoints, 6, 1e-3 * opt.abs_tol);
  Options inner = opt;
  inner.abs_tol = std::max(0.5 * opt.abs_tol, opt.abs_tol - sweep.tail_error);
  Result r = integrate_panels(f, sweep.cuts, inner);
  r.value += sweep.tail;
  r.error += sweep.tail_error;
  r.evaluations += sweep.evaluations;
  if (r.error > std::max(opt.abs_tol, opt.rel_tol * std::abs(r.value)))
    throw NumericalError("quadrature: graded tail did not converge (error estimate " +
                         std::to_string(r.error) + ")");
  return r;
}

}  // namespace mono::quad
