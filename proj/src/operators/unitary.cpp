#include "mono/operators/unitary.hpp"

#include <cmath>

namespace mono {

void AutomorphismParams::validate() const {
  if (!(std::abs(a * d - b * c - 1.0) <= 1e-12))
    throw DomainError("automorphism matrix must have determinant 1");
}

Complex AutomorphismParams::tau(Complex s) const {
  const Complex u = s + 0.5;
  const Complex den = kI * c * u + d;
  if (std::abs(den) == 0.0) throw DomainError("automorphism is singular at this point");
  return (a * u - kI * b) / den - 0.5;
}

AutomorphismParams AutomorphismParams::dilation(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("dilation factor must be positive");
  const double r = std::sqrt(alpha);
  return {r, 0.0, 0.0, 1.0 / r};
}

AutomorphismParams operator*(const AutomorphismParams& p, const AutomorphismParams& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

MonomialOperator::MonomialOperator(std::function<Complex(Complex)> tau, std::function<Complex(Complex)> c,
                                   Kind kind)
    : tau_(std::move(tau)), c_(std::move(c)), kind_(kind) {}

ScaledMonomial MonomialOperator::operator()(const ScaledMonomial& f) const {
  if (f.exponent.logpow() != 0) throw DomainError("monomial operators act on simple monomials");
  const Complex s = f.exponent.value();
  return {f.constant * c_(s), Exponent(tau_(s))};
}

MonomialOperator MonomialOperator::after(const MonomialOperator& inner) const {
  auto outer_tau = tau_;
  auto outer_c = c_;
  auto inner_tau = inner.tau_;
  auto inner_c = inner.c_;
  const Kind kind = kind_ == Kind::Unitary && inner.kind_ == Kind::Unitary ? Kind::Unitary : Kind::General;
  return MonomialOperator([=](Complex s) { return outer_tau(inner_tau(s)); },
                          [=](Complex s) { return inner_c(s) * outer_c(inner_tau(s)); }, kind);
}

Complex unitary_c0(const AutomorphismParams& p, double c0_phase) {
  p.validate();
  const Complex t0 = p.tau(0.0);
  return std::polar(1.0 / std::sqrt(1.0 + 2.0 * t0.real()), c0_phase);
}

MonomialOperator unitary_from_automorphism(const AutomorphismParams& p, double c0_phase) {
  const Complex c0 = unitary_c0(p, c0_phase);
  const Complex t0c = std::conj(p.tau(0.0));
  return MonomialOperator([p](Complex s) { return p.tau(s); },
                          [p, c0, t0c](Complex s) { return c0 * (1.0 + t0c + p.tau(s)) / (1.0 + s); },
                          MonomialOperator::Kind::Unitary);
}

}  // namespace mono
