#pragma once

#include <optional>
#include <vector>

#include "mono/core/exponent.hpp"
#include "mono/sarason/disk.hpp"

namespace mono {

/// Parameters of the atomic space A_{tau,w}. For tau != 1 the real number c (also
/// written delta) solves 2ic = (tau + 1) / (tau - 1), equivalently
/// tau = (2ic + 1) / (2ic - 1), and wp = (1 + 4c^2) w. For tau = 1, c is undefined
/// and wp = w.
class AtomicSpaceParams {
 public:
  /// Throws DomainError unless |tau| = 1 (to 1e-12) and w > 0.
  AtomicSpaceParams(Complex tau, double w);
  /// The space with parameter c and scaled weight wp.
  static AtomicSpaceParams from_c(double c, double wp);

  Complex tau() const { return tau_; }
  double w() const { return w_; }
  bool at_one() const { return !c_.has_value(); }
  /// Throws DomainError when tau = 1.
  double c() const;
  double wp() const { return wp_; }

 private:
  Complex tau_;
  double w_;
  std::optional<double> c_;
  double wp_;
};

/// ||P_{A_{tau,w}} x^s||^2 for a simple exponent s = u + iv:
///   tau = 1:  (1 - e^(-2w(1+2u))) / (1+2u)
///   tau != 1: (1 - e^(-2 wp (1+2u) / ((1+2u)^2 + 4(c-v)^2))) / (1+2u)
double proj_norm_sq(const AtomicSpaceParams& p, const Exponent& s);

/// The same quantity computed through A_{tau,w} = M_{x^{ic}} J A_{1,wp}: apply J to
/// x^(s - ic) and restrict to [e^(-2 wp), 1]. Only for tau != 1.
double proj_norm_sq_via_J(const AtomicSpaceParams& p, const Exponent& s);

/// Finite measure sum_k w_k delta_{tau_k} on the unit circle.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  /// Throws DomainError for |tau_k| != 1, w_k <= 0 or repeated atoms.
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const;
  /// Trigonometric moment sum_k w_k conj(tau_k)^j.
  Complex moment(int j) const;

 private:
  std::vector<Atom> atoms_;
};

/// The singular inner function prod_k S_{tau_k, w_k}.
class InnerFunction {
 public:
  explicit InnerFunction(AtomicMeasure mu) : mu_(std::move(mu)) {}

  const AtomicMeasure& measure() const { return mu_; }
  /// Throws DomainError if |z| >= 1 or z lies within 1e-14 of an atom.
  Complex operator()(Complex z) const;
  std::vector<Complex> taylor(std::size_t n) const { return singular_inner_taylor(mu_.atoms(), n); }

 private:
  AtomicMeasure mu_;
};

/// prod_k exp(-w_k (tau_k + z) / (tau_k - z)).
Complex inner_eval(const InnerFunction& s, DiskPoint z);

struct ConjugationCheck {
  /// max_z |S_{-1,wp}(psi(z)) - lambda S_{tau,w}(z)|.
  double max_deviation = 0.0;
  /// lambda recovered from the first grid point.
  Complex constant;
  /// | |lambda| - 1 |.
  double unimodularity_error = 0.0;
  /// |lambda - e^(2icw)|.
  double constant_formula_error = 0.0;
  /// |psi(tau) + 1|: psi sends the atom tau to the atom -1.
  double atom_map_error = 0.0;
  Complex tau;
  double w = 0.0;
};

/// psi(z) = ((1 - ic) z + ic) / (1 + ic - icz).
Complex conjugation_psi(double c, Complex z);

/// Compares S_{-1,wp} o psi with S_{tau,w}, tau = (2ic+1)/(2ic-1), w = wp / (1+4c^2).
ConjugationCheck conjugation_identity_check(double c, double wp, const std::vector<Complex>& z_grid);

}  // namespace mono
