#include "mono/operators/multiplier.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "mono/core/gram.hpp"

namespace mono {
namespace {

Complex horner(const std::vector<Complex>& c, Complex w) {
  Complex s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * w + c[k];
  return s;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0.0) --deg;
  if (deg <= 1) return {};
  const std::size_t n = deg - 1;
  CMatrix comp = CMatrix::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[i] / coeffs[n];
  const Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return roots;
}

Multiplier Multiplier::polynomial(std::vector<Complex> coeffs) {
  Multiplier m;
  m.kind_ = Kind::Polynomial;
  m.num_ = std::move(coeffs);
  return m;
}

Multiplier Multiplier::rational(std::vector<Complex> num, std::vector<Complex> den) {
  bool nonzero = false;
  for (const auto& c : den) nonzero = nonzero || c != 0.0;
  if (!nonzero) throw DomainError("rational multiplier has a zero denominator");
  for (const Complex r : polynomial_roots(den))
    if (std::abs(r - 1.0) <= 1.0 + 1e-12)
      throw DomainError("rational multiplier has a pole in the closed disk |w - 1| <= 1");
  Multiplier m;
  m.kind_ = Kind::Rational;
  m.num_ = std::move(num);
  m.den_ = std::move(den);
  return m;
}

Multiplier Multiplier::table(std::vector<Complex> points, std::vector<Complex> values) {
  if (points.size() != values.size()) throw DomainError("multiplier table needs equally many points and values");
  Multiplier m;
  m.kind_ = Kind::Table;
  m.points_ = std::move(points);
  m.values_ = std::move(values);
  return m;
}

Complex Multiplier::operator()(Complex w) const {
  if (!(std::abs(w - 1.0) < 1.0)) throw DomainError("multiplier evaluated outside the disk |w - 1| < 1");
  switch (kind_) {
    case Kind::Polynomial: return horner(num_, w);
    case Kind::Rational: return horner(num_, w) / horner(den_, w);
    case Kind::Table:
      for (std::size_t i = 0; i < points_.size(); ++i)
        if (std::abs(points_[i] - w) <= 1e-12 * std::max(1.0, std::abs(w))) return values_[i];
      throw DomainError("multiplier table has no value at the requested point");
  }
  return 0.0;
}

Complex phi_of_H(const Multiplier& phi, const Exponent& s) {
  if (s.logpow() != 0) throw DomainError("phi(H) is diagonal only on simple monomials");
  return phi(1.0 / (1.0 + s.value()));
}

std::vector<Complex> phi_of_H(const Multiplier& phi, const MonomialSet& set) {
  std::vector<Complex> out;
  out.reserve(set.size());
  for (const auto& s : set) out.push_back(phi_of_H(phi, s));
  return out;
}

PickResult pick_positivity_check(const Multiplier& phi, double m, const MonomialSet& grid, double tol) {
  if (grid.empty() || grid.size() > 64) throw DomainError("Pick grid must have between 1 and 64 points");
  const auto v = phi_of_H(phi, grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  CMatrix p(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      p(i, j) = (m * m - v[i] * std::conj(v[j])) / (1.0 + grid[i].value() + std::conj(grid[j].value()));
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(p, Eigen::EigenvaluesOnly);
  PickResult r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.max_eigenvalue = es.eigenvalues().maxCoeff();
  const double scale = std::max(1.0, std::abs(r.max_eigenvalue));
  r.positive = r.min_eigenvalue >= -tol * scale;
  r.cauchy_condition = gram_condition_estimate(grid);
  r.conditioning_warning = r.cauchy_condition > 1e12;
  return r;
}

}  // namespace mono
