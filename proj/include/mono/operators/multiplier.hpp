#pragma once

#include <vector>

#include "mono/core/exponent.hpp"

namespace mono {

/// Function phi on the disk D(1,1) = {|w - 1| < 1}: a polynomial, a rational
/// function with no pole in the closed disk, or a table of point values.
class Multiplier {
 public:
  enum class Kind { Polynomial, Rational, Table };

  /// sum_k coeffs[k] w^k.
  static Multiplier polynomial(std::vector<Complex> coeffs);
  /// p(w) / q(w); throws DomainError if q has a root with |w - 1| <= 1 + 1e-12,
  /// found from the eigenvalues of the companion matrix.
  static Multiplier rational(std::vector<Complex> num, std::vector<Complex> den);
  /// phi(w_i) = values[i]; evaluation elsewhere throws DomainError.
  static Multiplier table(std::vector<Complex> points, std::vector<Complex> values);

  static Multiplier identity() { return polynomial({0.0, 1.0}); }
  static Multiplier constant(Complex c) { return polynomial({c}); }

  Kind kind() const { return kind_; }
  /// Throws DomainError unless |w - 1| < 1.
  Complex operator()(Complex w) const;

 private:
  Kind kind_ = Kind::Polynomial;
  std::vector<Complex> num_, den_, points_, values_;
};

/// Roots of sum_k coeffs[k] w^k (trailing zero coefficients ignored).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// phi(H) x^s = phi(1/(1+s)) x^s.
Complex phi_of_H(const Multiplier& phi, const Exponent& s);
/// Diagonal of phi(H) over a set of simple exponents.
std::vector<Complex> phi_of_H(const Multiplier& phi, const MonomialSet& set);

struct PickResult {
  bool positive = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  /// Condition estimate of the underlying Cauchy matrix; small eigenvalues are
  /// unreliable when this is large.
  double cauchy_condition = 1.0;
  bool conditioning_warning = false;
};

/// Pick matrix P_ij = (M^2 - phi(w_i) conj phi(w_j)) / (1 + s_i + conj s_j), w = 1/(1+s),
/// tested for positive semidefiniteness (min eigenvalue >= -tol * max(1, ||P||)).
/// Positivity on a finite grid is necessary for ||phi(H)|| <= M, not sufficient.
PickResult pick_positivity_check(const Multiplier& phi, double m, const MonomialSet& grid, double tol = 1e-12);

}  // namespace mono
