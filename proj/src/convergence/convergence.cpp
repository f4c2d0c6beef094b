#include "mono/convergence/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mono {

SubspaceSequence SubspaceSequence::interval(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("interval family needs 0 < rho < 1");
  const double r = std::sqrt(rho);
  auto width = [r](std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(double(n) * (1.0 - r) / r)));
  };
  return interval(width, "interval rho=" + std::to_string(rho));
}

SubspaceSequence SubspaceSequence::interval(std::function<std::size_t(std::size_t)> width, std::string description) {
  SubspaceSequence s;
  s.description = std::move(description);
  s.generator = [width](std::size_t n) {
    const std::size_t m = width(n);
    if (m == 0) throw DomainError("interval family needs N_n >= 1");
    std::vector<Complex> p;
    p.reserve(m);
    for (std::size_t k = n + 1; k <= n + m; ++k) p.push_back(double(k));
    return MonomialSet::simple(p);
  };
  return s;
}

SubspaceSequence SubspaceSequence::muntz(SequenceSpec seq) {
  SubspaceSequence s;
  s.description = "muntz";
  s.nested = true;
  s.generator = [seq](std::size_t n) { return seq.first(n); };
  return s;
}

SubspaceSequence SubspaceSequence::constant(MonomialSet set) {
  SubspaceSequence s;
  s.description = "constant";
  s.nested = true;
  s.generator = [set](std::size_t) { return set; };
  return s;
}

std::vector<CurvePoint> distance_curve(const FunctionSpec& f, const SubspaceSequence& seq, std::size_t n_max,
                                       const DistanceOptions& opt) {
  const auto target = f.closed_form();
  if (!target) throw DomainError("distance_curve needs a target with closed-form pairings");
  std::vector<CurvePoint> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    CurvePoint p;
    p.n = n;
    try {
      const auto r = distance_auto(*target, seq(n), opt);
      p.distance = r.distance;
      if (std::isfinite(r.condition_estimate)) p.condition_estimate = r.condition_estimate;
      p.digits = r.digits;
      p.method = r.method;
    } catch (const NumericalError& e) {
      p.error = e.what();
    } catch (const DomainError& e) {
      p.error = e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::InLimit: return "in-limit";
    case Membership::NotInLimit: return "not-in-limit";
    case Membership::Undetermined: return "undetermined";
  }
  return "?";
}

MembershipVerdict limit_membership(const std::vector<CurvePoint>& curve, double tol) {
  MembershipVerdict v;
  std::vector<double> n, d;
  for (const auto& p : curve)
    if (p.distance) {
      n.push_back(double(p.n));
      d.push_back(*p.distance);
    }
  if (d.size() < 3) return v;
  const std::size_t w = std::min(d.size(), std::max<std::size_t>(3, d.size() / 4));
  const std::size_t start = d.size() - w;
  v.window = w;
  v.last_value = d.back();

  // Least squares d = a + b x with x = 1/n.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = start; i < d.size(); ++i) {
    const double x = 1.0 / n[i];
    sx += x;
    sy += d[i];
    sxx += x * x;
    sxy += x * d[i];
  }
  const double m = double(w);
  const double det = m * sxx - sx * sx;
  if (det > 0.0) {
    v.rate = (m * sxy - sx * sy) / det;
    v.extrapolated_limit = (sy - v.rate * sx) / m;
  } else {
    v.extrapolated_limit = d.back();
  }
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  v.limit_estimate = std::clamp(v.extrapolated_limit, *lo, *hi);

  bool nonincreasing = true;
  bool above = true;
  bool positive = true;
  for (std::size_t i = start; i < d.size(); ++i) {
    if (i > start && d[i] > d[i - 1] * (1.0 + 1e-12) + 1e-15) nonincreasing = false;
    if (d[i] < tol) above = false;
    if (!(d[i] > 1e-300)) positive = false;
  }
  if (positive) {
    double lx = 0, ly = 0, lxx = 0, lxy = 0;
    for (std::size_t i = start; i < d.size(); ++i) {
      const double x = std::log(n[i]), y = std::log(d[i]);
      lx += x;
      ly += y;
      lxx += x * x;
      lxy += x * y;
    }
    const double ldet = m * lxx - lx * lx;
    if (ldet > 0.0) v.log_slope = (m * lxy - lx * ly) / ldet;
  } else {
    v.log_slope = -std::numeric_limits<double>::infinity();
  }

  if (nonincreasing && (v.extrapolated_limit <= tol || v.log_slope <= -0.25)) v.verdict = Membership::InLimit;
  else if (above && v.extrapolated_limit >= tol && v.log_slope > -0.05) v.verdict = Membership::NotInLimit;
  return v;
}

MembershipVerdict limit_membership_test(const FunctionSpec& f, const SubspaceSequence& seq, std::size_t n_max,
                                        double tol, const DistanceOptions& opt) {
  return limit_membership(distance_curve(f, seq, n_max, opt), tol);
}

ConvergenceReport muntz_limit_experiment(const SequenceSpec& seq, const FunctionSpec& f, std::size_t n_max,
                                         Criterion criterion, double tol, const DistanceOptions& opt) {
  ConvergenceReport r;
  r.density = muntz_verdict(seq, criterion);
  const auto s = SubspaceSequence::muntz(seq);
  r.description = s.description;
  r.curve = distance_curve(f, s, n_max, opt);
  r.membership = limit_membership(r.curve, tol);
  r.disagreement = r.density.density == Density::Dense && r.membership.verdict == Membership::NotInLimit;
  return r;
}

}  // namespace mono
