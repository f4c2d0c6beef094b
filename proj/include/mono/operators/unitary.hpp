#pragma once

#include <functional>

#include "mono/core/scaled_monomial.hpp"

namespace mono {

/// Real matrix [[A, B], [C, D]] with AD - BC = 1, acting on the half-plane through
/// tau(s) = (A(s + 1/2) - iB) / (iC(s + 1/2) + D) - 1/2.
struct AutomorphismParams {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  /// Throws DomainError unless |AD - BC - 1| <= 1e-12.
  void validate() const;
  Complex tau(Complex s) const;

  static AutomorphismParams identity() { return {}; }
  /// tau(s) = -s / (1 + 2s).
  static AutomorphismParams involution() { return {0.0, -0.5, 2.0, 0.0}; }
  /// tau(s) = alpha s + (alpha - 1) / 2.
  static AutomorphismParams dilation(double alpha);
  /// tau(s) = s + i y.
  static AutomorphismParams translation(double y) { return {1.0, -y, 0.0, 1.0}; }
};

/// Matrix product, so that (p * q).tau = p.tau o q.tau.
AutomorphismParams operator*(const AutomorphismParams& p, const AutomorphismParams& q);

/// T x^s = c(s) x^tau(s).
class MonomialOperator {
 public:
  enum class Kind { Unitary, HardyMultiplier, ShiftLike, General };

  MonomialOperator(std::function<Complex(Complex)> tau, std::function<Complex(Complex)> c, Kind kind);

  Complex tau(Complex s) const { return tau_(s); }
  Complex c(Complex s) const { return c_(s); }
  Kind kind() const { return kind_; }

  /// Image of coef x^s; throws DomainError if tau(s) leaves the half-plane.
  ScaledMonomial operator()(const ScaledMonomial& f) const;
  ScaledMonomial operator()(const Exponent& s) const { return (*this)(ScaledMonomial{1.0, s}); }

  /// This operator applied after `inner`.
  MonomialOperator after(const MonomialOperator& inner) const;

 private:
  std::function<Complex(Complex)> tau_;
  std::function<Complex(Complex)> c_;
  Kind kind_;
};

/// c(s) = c0 (1 + conj tau(0) + tau(s)) / (1 + s) with c0 = e^(i phase) / sqrt(1 + 2 Re tau(0)).
MonomialOperator unitary_from_automorphism(const AutomorphismParams& p, double c0_phase = 0.0);

/// c0 of the operator above.
Complex unitary_c0(const AutomorphismParams& p, double c0_phase = 0.0);

}  // namespace mono
