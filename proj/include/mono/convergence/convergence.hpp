#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mono/core/distance.hpp"
#include "mono/core/muntz.hpp"
#include "mono/sarason/function_spec.hpp"

namespace mono {

/// n -> S_n for n = 1, 2, ...
struct SubspaceSequence {
  std::function<MonomialSet(std::size_t)> generator;
  std::string description;
  /// S_n is contained in S_{n+1} for every n.
  bool nested = false;

  MonomialSet operator()(std::size_t n) const { return generator(n); }

  /// S_n = {n+1, ..., n+N_n} with N_n = max(1, round(n (1 - sqrt(rho)) / sqrt(rho))), so
  /// that n / (n + N_n) -> sqrt(rho) and M(S_n) -> L^2([rho, 1]). Needs 0 < rho < 1.
  static SubspaceSequence interval(double rho);
  /// S_n = {n+1, ..., n+N(n)}.
  static SubspaceSequence interval(std::function<std::size_t(std::size_t)> width, std::string description);
  /// S_n = first n terms of the sequence.
  static SubspaceSequence muntz(SequenceSpec seq);
  /// S_n = S.
  static SubspaceSequence constant(MonomialSet set);
};

struct CurvePoint {
  std::size_t n = 0;
  /// Empty when the solve at this n failed; `error` then says why.
  std::optional<double> distance;
  /// Absent for closed-form points.
  std::optional<double> condition_estimate;
  int digits = 0;
  std::string method;
  std::string error;
};

/// dist(f, M(S_n)) for n = 1..n_max. Monomial targets against simple sets use the
/// closed-form product; other targets use Gram solves with closed-form pairings.
/// Throws DomainError if f has no closed-form pairings.
std::vector<CurvePoint> distance_curve(const FunctionSpec& f, const SubspaceSequence& seq, std::size_t n_max,
                                       const DistanceOptions& opt = {});

enum class Membership { InLimit, NotInLimit, Undetermined };

const char* to_string(Membership m);

struct MembershipVerdict {
  Membership verdict = Membership::Undetermined;
  /// Intercept of a least-squares fit d(n) = a + b/n over the trailing window.
  double extrapolated_limit = 0.0;
  /// extrapolated_limit clamped into the range of the observed curve.
  double limit_estimate = 0.0;
  /// Fitted slope b.
  double rate = 0.0;
  /// Slope of ln d against ln n over the window (-inf if the curve reaches 0).
  double log_slope = 0.0;
  double last_value = 0.0;
  std::size_t window = 0;
};

/// Three-valued test of lim dist(f, M(S_n)) = 0 from the last quarter of the curve
/// (at least 3 points).
///   in-limit:     the window does not increase, and either the fitted limit is <= tol
///                 or the log-log slope is <= -1/4 (power-law decay such as n^-1/2,
///                 which a fit in 1/n extrapolates to a positive value)
///   not-in-limit: every window value and the fitted limit are >= tol and the
///                 log-log slope is above -0.05 (the curve is flattening)
/// Anything else, or fewer than 3 usable points, is undetermined.
MembershipVerdict limit_membership(const std::vector<CurvePoint>& curve, double tol = 1e-3);

MembershipVerdict limit_membership_test(const FunctionSpec& f, const SubspaceSequence& seq, std::size_t n_max,
                                        double tol = 1e-3, const DistanceOptions& opt = {});

struct ConvergenceReport {
  std::string description;
  std::vector<CurvePoint> curve;
  MembershipVerdict membership;
  DensityVerdict density;
  /// The analytic density verdict says dense but the curve does not go to 0.
  bool disagreement = false;
};

/// Density verdict of the sequence next to the observed curve of f along its
/// partial sets.
ConvergenceReport muntz_limit_experiment(const SequenceSpec& seq, const FunctionSpec& f, std::size_t n_max,
                                         Criterion criterion = Criterion::ComplexSzasz, double tol = 1e-3,
                                         const DistanceOptions& opt = {});

}  // namespace mono
