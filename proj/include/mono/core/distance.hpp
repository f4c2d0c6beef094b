#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mono/core/gram.hpp"

namespace mono {

/// Supplies <f, m> for a basis monomial m of the span.
using PairingOracle = std::function<Complex(const Exponent&)>;

struct DistanceOptions {
  GramOptions gram;
  /// Condition estimates above this value set `ill_conditioned` on the result.
  double warn_threshold = 1e12;
};

struct DistanceResult {
  double distance = 0.0;
  /// Best-approximation coefficients in the basis order of the set.
  std::vector<Complex> coefficients;
  double condition_estimate = 1.0;
  /// Digits of the arithmetic used for the solve (16, 100 or 250), 0 for closed forms.
  int digits = 16;
  bool ill_conditioned = false;
  std::string method;
};

/// dist(f, M(S)) from the Gram normal equations, given the pairings <f, m> and ||f||^2.
///
/// Switches to 100-digit arithmetic when the condition estimate exceeds
/// `opt.gram.extended_threshold` (or when extended precision is requested), and to
/// 250 digits beyond 1e85. Throws NumericalError if even the widest solve fails.
DistanceResult distance_to_span(const PairingOracle& pairing, double f_norm_sq,
                                const MonomialSet& set, const DistanceOptions& opt = {});

/// One summand coef * chi_[cutoff,1](x) * x^t (ln x)^k of a closed-form target.
struct TargetTerm {
  Complex coef;
  Exponent exponent;
  double cutoff = 0.0;
};

/// Finite combination of (truncated) log-monomials whose pairings with monomials and
/// whose norm are known in closed form:
///   <chi_[a,1] x^t, x^s> = (1 - a^(1 + t + conj s)) / (1 + t + conj s).
/// A term with cutoff > 0 must have logpow 0 and pairs only with logpow-0 monomials.
class ClosedFormTarget {
 public:
  ClosedFormTarget() = default;
  explicit ClosedFormTarget(std::vector<TargetTerm> terms);

  static ClosedFormTarget monomial(Exponent t, Complex coef = 1.0);
  static ClosedFormTarget truncated_monomial(double cutoff, Exponent t, Complex coef = 1.0);

  const std::vector<TargetTerm>& terms() const { return terms_; }

  /// <f, m> evaluated in the complex type `Scalar`.
  template <class Scalar>
  Scalar pairing(const Exponent& m) const;
  /// ||f||^2 evaluated in the complex type `Scalar` (imaginary part zero).
  template <class Scalar>
  Scalar norm_sq() const;

  /// Single untruncated monomial with logpow 0, if that is what this target is.
  bool is_simple_monomial() const;

 private:
  std::vector<TargetTerm> terms_;
};

/// Distance from a closed-form target. Pairings and ||f||^2 are formed in the solve
/// precision, so the cancellation in ||f||^2 - ||P f||^2 is resolved there.
DistanceResult distance_to_span(const ClosedFormTarget& f, const MonomialSet& set,
                                const DistanceOptions& opt = {});

/// dist(x^t, M(S)) = (1 + 2 Re t)^(-1/2) prod_{s in S} |t - s| / |t + conj s + 1|
/// for distinct simple exponents; evaluated as a running product of O(1) factors.
double monomial_distance_closed_form(const Exponent& t, const MonomialSet& set);

/// Closed form when f is a single simple monomial and S is simple, Gram solve otherwise.
DistanceResult distance_auto(const ClosedFormTarget& f, const MonomialSet& set,
                             const DistanceOptions& opt = {});

}  // namespace mono
