#include "mono/laguerre/laguerre.hpp"

#include <cmath>
#include <string>

#include "mono/sarason/transform.hpp"

namespace mono {

double LaguerreExpansion::norm_sq() const {
  double s = tail_norm_sq;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

std::vector<double> eval_e_all(int n, double x) {
  if (n < 0) throw DomainError("basis index must be nonnegative");
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("evaluation point must lie in (0, 1]");
  const double t = -std::log(x);
  std::vector<double> l(static_cast<std::size_t>(n) + 1);
  l[0] = 1.0;
  if (n >= 1) l[1] = 1.0 - t;
  for (int k = 1; k < n; ++k) l[k + 1] = ((2.0 * k + 1.0 - t) * l[k] - k * l[k - 1]) / (k + 1.0);
  if (!std::isfinite(l.back()))
    throw NumericalError("e_" + std::to_string(n) + " overflows at x = " + std::to_string(x));
  return l;
}

double eval_e(int n, double x) { return eval_e_all(n, x).back(); }

std::size_t default_truncation(const Exponent& s, double tol, std::size_t cap) {
  const double r = std::norm(s.value() / (s.value() + 1.0));
  if (r == 0.0) return 0;
  const double needed = std::log(tol) / std::log(r) - 1.0;
  if (!(needed < static_cast<double>(cap))) return cap;
  return needed <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(needed));
}

LaguerreExpansion expand_monomial(const Exponent& s, std::size_t n) {
  LaguerreExpansion out;
  if (s.logpow() > 0) {
    out.coeffs = forward_monomial(s).taylor(n + 1);
    double kept = 0.0;
    for (const auto& c : out.coeffs) kept += std::norm(c);
    out.tail_norm_sq = std::max(0.0, s.norm_sq() - kept);
    return out;
  }
  const Complex sv = s.value();
  const Complex q = sv / (sv + 1.0);
  out.coeffs.resize(n + 1);
  Complex c = 1.0 / (sv + 1.0);
  for (std::size_t k = 0; k <= n; ++k, c *= q) out.coeffs[k] = c;
  out.tail_norm_sq = std::pow(std::norm(q), double(n + 1)) / (1.0 + 2.0 * s.re());
  return out;
}

Complex evaluate(const LaguerreExpansion& f, double x) {
  if (f.coeffs.empty()) return 0.0;
  const auto e = eval_e_all(static_cast<int>(f.coeffs.size()) - 1, x);
  Complex s = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) s += f.coeffs[k] * e[k];
  return s;
}

Complex inner(const LaguerreExpansion& a, const LaguerreExpansion& b) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) s += a.coeffs[k] * std::conj(b.coeffs[k]);
  return s;
}

ScaledMonomial hstar_power(int j) {
  if (j < 0) throw DomainError("power must be nonnegative");
  return {(j % 2 ? -1.0 : 1.0) / std::tgamma(j + 1.0), Exponent(0.0, 0.0, j)};
}

ScaledMonomial apply_J_monomial(const Exponent& s) {
  if (s.logpow() != 0) throw DomainError("J is applied to simple monomials only");
  const Complex d = 1.0 + 2.0 * s.value();
  return {1.0 / d, Exponent(-s.value() / d)};
}

LaguerreExpansion apply_J_expansion(const LaguerreExpansion& f) {
  LaguerreExpansion out = f;
  for (std::size_t k = 1; k < out.coeffs.size(); k += 2) out.coeffs[k] = -out.coeffs[k];
  return out;
}

}  // namespace mono
