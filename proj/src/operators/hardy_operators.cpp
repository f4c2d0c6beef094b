#include "mono/operators/hardy_operators.hpp"

#include <cmath>

#include "mono/quadrature.hpp"

namespace mono {
namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

double hat_entry(HardyOp op, std::size_t n, std::size_t k) {
  switch (op) {
    case HardyOp::H: return n == k ? 1.0 : (k == n + 1 ? -1.0 : 0.0);
    case HardyOp::X: return composition_entry(k, n + 1);
    case HardyOp::V: return composition_entry(k, n) - composition_entry(k, n + 1);
  }
  return 0.0;
}

// Operator norms on L^2[0,1]: ||H|| = 2, ||X|| = 1, ||V|| = 2/pi < 1.
double op_norm(HardyOp op) { return op == HardyOp::H ? 2.0 : 1.0; }

}  // namespace

Complex MonomialCombination::operator()(double x) const {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("evaluation point must lie in (0, 1]");
  const double l = std::log(x);
  Complex s = 0.0;
  for (const auto& t : terms) s += t.coef * std::exp(t.exponent.value() * l) * std::pow(l, t.exponent.logpow());
  return s;
}

LaguerreExpansion MonomialCombination::expand(std::size_t n) const {
  LaguerreExpansion out;
  out.coeffs.assign(n + 1, 0.0);
  double tail_root = 0.0;
  for (const auto& t : terms) {
    const auto e = expand_monomial(t.exponent, n);
    for (std::size_t k = 0; k <= n; ++k) out.coeffs[k] += t.coef * e.coeffs[k];
    tail_root += std::abs(t.coef) * std::sqrt(e.tail_norm_sq);
  }
  out.tail_norm_sq = tail_root * tail_root;
  return out;
}

const char* to_string(HardyOp op) {
  switch (op) {
    case HardyOp::H: return "H";
    case HardyOp::X: return "X";
    case HardyOp::V: return "V";
  }
  return "?";
}

HardyOp hardy_op_from_string(const std::string& name) {
  if (name == "H") return HardyOp::H;
  if (name == "X") return HardyOp::X;
  if (name == "V") return HardyOp::V;
  throw DomainError("unknown operator '" + name + "' (expected H, X or V)");
}

MonomialCombination apply_H(const MonomialCombination& f) {
  // H x^s (ln x)^k = d^k/ds^k [x^s / (s+1)]
  //               = sum_j C(k,j) (-1)^(k-j) (k-j)! / (s+1)^(k-j+1) x^s (ln x)^j.
  MonomialCombination out;
  for (const auto& t : f.terms) {
    const int k = t.exponent.logpow();
    const Complex sp1 = t.exponent.value() + 1.0;
    for (int j = 0; j <= k; ++j) {
      const int d = k - j;
      const Complex c = binomial(k, j) * (d % 2 ? -1.0 : 1.0) * std::tgamma(d + 1.0) / std::pow(sp1, d + 1);
      out.terms.push_back({t.coef * c, Exponent(t.exponent.value(), j)});
    }
  }
  return out;
}

MonomialCombination apply_X(const MonomialCombination& f) {
  MonomialCombination out;
  for (const auto& t : f.terms)
    out.terms.push_back({t.coef, Exponent(t.exponent.value() + 1.0, t.exponent.logpow())});
  return out;
}

MonomialCombination apply_V(const MonomialCombination& f) { return apply_X(apply_H(f)); }

MonomialCombination apply(HardyOp op, const MonomialCombination& f) {
  switch (op) {
    case HardyOp::H: return apply_H(f);
    case HardyOp::X: return apply_X(f);
    case HardyOp::V: return apply_V(f);
  }
  return f;
}

double composition_entry(std::size_t k, std::size_t m) {
  if (m == 0) return k == 0 ? 1.0 : 0.0;
  const double kd = double(k), md = double(m);
  return std::exp(std::lgamma(md + kd) - std::lgamma(kd + 1.0) - std::lgamma(md) - (md + kd) * std::log(2.0));
}

Eigen::MatrixXd hat_matrix(HardyOp op, std::size_t n) {
  if (n > 2048) throw DomainError("hat_matrix: N must not exceed 2048");
  Eigen::MatrixXd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = hat_entry(op, r, c);
  return m;
}

LaguerreExpansion apply(HardyOp op, const LaguerreExpansion& f) {
  const std::size_t n = f.size();
  LaguerreExpansion out;
  out.coeffs.assign(n, 0.0);
  if (n == 0) {
    out.tail_norm_sq = std::pow(op_norm(op), 2) * f.tail_norm_sq;
    return out;
  }
  // Rows beyond the truncation are summed into the tail; for X and V they decay
  // like 2^-n, so 2N + 60 rows exhaust double precision.
  const std::size_t rows = op == HardyOp::H ? n + 1 : 2 * n + 60;
  double rest = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      const double e = hat_entry(op, r, c);
      if (e != 0.0) s += e * f.coeffs[c];
    }
    if (r < n) out.coeffs[r] = s;
    else rest += std::norm(s);
  }
  const double bound = std::sqrt(rest) + op_norm(op) * std::sqrt(f.tail_norm_sq);
  out.tail_norm_sq = bound * bound;
  return out;
}

SampledFunction apply(HardyOp op, const SampledFunction& f) {
  SampledFunction out;
  out.singular_at_zero = f.singular_at_zero && op == HardyOp::H;
  out.breakpoints = f.breakpoints;
  if (op == HardyOp::X) {
    out.eval = [f](double x) { return x * f(x); };
    return out;
  }
  auto average = [f](double x) {
    std::vector<double> cuts;
    for (double b : f.breakpoints)
      if (b < x) cuts.push_back(b / x);
    return quad::integrate_unit_graded([&](double u) { return f(x * u); }, cuts).value;
  };
  if (op == HardyOp::H) out.eval = average;
  else out.eval = [average](double x) { return x * average(x); };
  return out;
}

}  // namespace mono
