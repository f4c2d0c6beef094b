#include "mono/core/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "solve_detail.hpp"

namespace mono {
namespace {

template <class Scalar>
Scalar from_complex(Complex z) {
  return Scalar(z.real(), z.imag());
}

template <class Scalar>
Complex to_complex(const Scalar& z) {
  using std::imag;
  using std::real;
  return {static_cast<double>(real(z)), static_cast<double>(imag(z))};
}

// integral_a^1 x^p (ln x)^m dx for a in [0, 1); closed form only when a == 0 or m == 0.
template <class Scalar>
Scalar truncated_moment(double a, const Scalar& p, int m) {
  using std::exp;
  using std::log;
  const Scalar one_plus = Scalar(1) + p;
  if (a == 0.0) {
    Scalar r = Scalar(1) / one_plus;
    for (int j = 1; j <= m; ++j) r *= Scalar(-j) / one_plus;
    return r;
  }
  if (m != 0)
    throw DomainError("pairing of a truncated monomial with a log-monomial is not supported");
  const Scalar a_pow = exp(one_plus * log(Scalar(a)));
  return (Scalar(1) - a_pow) / one_plus;
}

int digits_for(double condition, const DistanceOptions& opt) {
  const bool extended =
      opt.gram.precision == Precision::Extended || condition > opt.gram.extended_threshold;
  if (!extended) return 16;
  if (condition < 1e85) return 100;
  if (condition < 1e220) return 250;
  throw NumericalError("Gram solve does not converge in extended precision (condition estimate " +
                       std::to_string(condition) + ")");
}

template <class Scalar, class Pair>
DistanceResult solve_with(const Pair& pair, const Scalar& f_norm_sq, const MonomialSet& set,
                          double condition, int digits, const DistanceOptions& opt) {
  using std::real;
  const Matrix<Scalar> g = gram_matrix<Scalar>(set);
  Vector<Scalar> b(static_cast<Eigen::Index>(set.size()));
  for (std::size_t i = 0; i < set.size(); ++i) b(static_cast<Eigen::Index>(i)) = pair(set[i]);
  const auto sol = detail::solve_normal(g, b);

  const Scalar gap = f_norm_sq - sol.projection_norm_sq;
  const double gap_d = static_cast<double>(real(gap));
  const double norm_d = static_cast<double>(real(f_norm_sq));
  const double residual_limit = digits == 16 ? 1e-6 : 1e-30;
  if (sol.relative_residual > residual_limit || gap_d < -1e-6 * std::max(norm_d, 1e-300)) {
    if (digits == 16)
      return {};  // signals the caller to retry in extended precision
    throw NumericalError("Gram solve failed in " + std::to_string(digits) +
                         "-digit arithmetic (relative residual " +
                         std::to_string(sol.relative_residual) + ")");
  }
  DistanceResult out;
  out.distance = std::sqrt(std::max(0.0, gap_d));
  out.coefficients.reserve(set.size());
  for (Eigen::Index i = 0; i < sol.coefficients.size(); ++i)
    out.coefficients.push_back(to_complex(sol.coefficients(i)));
  out.condition_estimate = condition;
  out.digits = digits;
  out.ill_conditioned = condition > opt.warn_threshold;
  out.method = "gram";
  return out;
}

void check_size(const MonomialSet& set, const DistanceOptions& opt) {
  if (set.size() > opt.gram.max_size)
    throw DomainError("distance_to_span: set of size " + std::to_string(set.size()) +
                      " exceeds the limit " + std::to_string(opt.gram.max_size));
}

// Runs the solve at the chosen precision; a failed double solve is retried in
// extended precision. `solve(digits)` returns an empty method string on failure.
template <class Solve>
DistanceResult solve_ladder(const Solve& solve, double condition, const DistanceOptions& opt) {
  int digits = digits_for(condition, opt);
  DistanceResult r = solve(digits);
  if (r.method.empty() && digits == 16) r = solve(condition < 1e85 ? 100 : 250);
  return r;
}

}  // namespace

DistanceResult distance_to_span(const PairingOracle& pairing, double f_norm_sq,
                                const MonomialSet& set, const DistanceOptions& opt) {
  if (f_norm_sq < 0.0) throw DomainError("distance_to_span: ||f||^2 must be nonnegative");
  check_size(set, opt);
  if (set.empty()) return {std::sqrt(f_norm_sq), {}, 1.0, 16, false, "empty"};
  const double condition = gram_condition_estimate(set);
  auto solve = [&](int digits) -> DistanceResult {
    if (digits == 16)
      return solve_with<Complex>(pairing, Complex(f_norm_sq), set, condition, 16, opt);
    if (digits == 100)
      return solve_with<ExtComplex>(
          [&](const Exponent& e) { return from_complex<ExtComplex>(pairing(e)); },
          ExtComplex(f_norm_sq), set, condition, 100, opt);
    return solve_with<WideComplex>(
        [&](const Exponent& e) { return from_complex<WideComplex>(pairing(e)); },
        WideComplex(f_norm_sq), set, condition, 250, opt);
  };
  return solve_ladder(solve, condition, opt);
}

ClosedFormTarget::ClosedFormTarget(std::vector<TargetTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!(t.cutoff >= 0.0 && t.cutoff < 1.0))
      throw DomainError("target cutoff must lie in [0, 1)");
    if (t.cutoff > 0.0 && t.exponent.logpow() != 0)
      throw DomainError("truncated target terms must have logpow 0");
  }
}

ClosedFormTarget ClosedFormTarget::monomial(Exponent t, Complex coef) {
  return ClosedFormTarget({TargetTerm{coef, t, 0.0}});
}

ClosedFormTarget ClosedFormTarget::truncated_monomial(double cutoff, Exponent t, Complex coef) {
  return ClosedFormTarget({TargetTerm{coef, t, cutoff}});
}

template <class Scalar>
Scalar ClosedFormTarget::pairing(const Exponent& m) const {
  Scalar sum(0);
  for (const auto& t : terms_) {
    const Scalar p = from_complex<Scalar>(t.exponent.value() + std::conj(m.value()));
    sum += from_complex<Scalar>(t.coef) *
           truncated_moment(t.cutoff, p, t.exponent.logpow() + m.logpow());
  }
  return sum;
}

template <class Scalar>
Scalar ClosedFormTarget::norm_sq() const {
  using std::real;
  Scalar sum(0);
  for (const auto& a : terms_) {
    for (const auto& b : terms_) {
      const Scalar p = from_complex<Scalar>(a.exponent.value() + std::conj(b.exponent.value()));
      const Scalar c = from_complex<Scalar>(a.coef * std::conj(b.coef));
      sum += c * truncated_moment(std::max(a.cutoff, b.cutoff), p,
                                  a.exponent.logpow() + b.exponent.logpow());
    }
  }
  return Scalar(real(sum));
}

template Complex ClosedFormTarget::pairing<Complex>(const Exponent&) const;
template ExtComplex ClosedFormTarget::pairing<ExtComplex>(const Exponent&) const;
template WideComplex ClosedFormTarget::pairing<WideComplex>(const Exponent&) const;
template Complex ClosedFormTarget::norm_sq<Complex>() const;
template ExtComplex ClosedFormTarget::norm_sq<ExtComplex>() const;
template WideComplex ClosedFormTarget::norm_sq<WideComplex>() const;

bool ClosedFormTarget::is_simple_monomial() const {
  return terms_.size() == 1 && terms_[0].cutoff == 0.0 && terms_[0].exponent.logpow() == 0;
}

DistanceResult distance_to_span(const ClosedFormTarget& f, const MonomialSet& set,
                                const DistanceOptions& opt) {
  check_size(set, opt);
  if (set.empty())
    return {std::sqrt(std::max(0.0, f.norm_sq<Complex>().real())), {}, 1.0, 16, false, "empty"};
  const double condition = gram_condition_estimate(set);
  auto solve = [&](int digits) -> DistanceResult {
    if (digits == 16)
      return solve_with<Complex>([&](const Exponent& e) { return f.pairing<Complex>(e); },
                                 f.norm_sq<Complex>(), set, condition, 16, opt);
    if (digits == 100)
      return solve_with<ExtComplex>([&](const Exponent& e) { return f.pairing<ExtComplex>(e); },
                                    f.norm_sq<ExtComplex>(), set, condition, 100, opt);
    return solve_with<WideComplex>([&](const Exponent& e) { return f.pairing<WideComplex>(e); },
                                   f.norm_sq<WideComplex>(), set, condition, 250, opt);
  };
  return solve_ladder(solve, condition, opt);
}

double monomial_distance_closed_form(const Exponent& t, const MonomialSet& set) {
  if (t.logpow() != 0 || !set.all_simple())
    throw DomainError("closed-form distance requires logpow 0 throughout");
  const Complex tv = t.value();
  double d = 1.0 / std::sqrt(1.0 + 2.0 * t.re());
  for (const auto& s : set) {
    const Complex sv = s.value();
    d *= std::abs(tv - sv) / std::abs(tv + std::conj(sv) + 1.0);
  }
  return d;
}

DistanceResult distance_auto(const ClosedFormTarget& f, const MonomialSet& set,
                             const DistanceOptions& opt) {
  if (f.is_simple_monomial() && set.all_simple() && opt.gram.precision == Precision::Double) {
    const TargetTerm& term = f.terms()[0];
    DistanceResult out;
    out.distance = std::abs(term.coef) * monomial_distance_closed_form(term.exponent, set);
    out.digits = 0;
    out.condition_estimate = std::numeric_limits<double>::quiet_NaN();
    out.method = "closed-form";
    return out;
  }
  return distance_to_span(f, set, opt);
}

}  // namespace mono
