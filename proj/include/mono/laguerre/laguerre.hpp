#pragma once

#include <cstddef>
#include <vector>

#include "mono/core/scaled_monomial.hpp"

namespace mono {

/// Coordinates c_0..c_N in the orthonormal basis e_n(x) = L_n(-ln x), plus the
/// squared norm of the part beyond N.
struct LaguerreExpansion {
  std::vector<Complex> coeffs;
  double tail_norm_sq = 0.0;

  std::size_t size() const { return coeffs.size(); }
  /// sum |c_n|^2 + tail_norm_sq.
  double norm_sq() const;
};

/// e_n(x) = sum_k C(n,k) (ln x)^k / k!, evaluated by the three-term recurrence
/// (n+1) L_{n+1}(t) = (2n+1-t) L_n(t) - n L_{n-1}(t) in t = -ln x.
/// Throws NumericalError if the result is not finite.
double eval_e(int n, double x);

/// e_0(x), ..., e_n(x).
std::vector<double> eval_e_all(int n, double x);

/// Smallest N with |s/(s+1)|^(2(N+1)) < tol, capped at `cap`.
std::size_t default_truncation(const Exponent& s, double tol = 1e-16, std::size_t cap = 1u << 20);

/// Coordinates of x^s: c_n = (1/(s+1)) (s/(s+1))^n for n <= N, with the exact tail
/// |s/(s+1)|^(2(N+1)) / (1 + 2 Re s). Log-monomials are expanded through their
/// transform; their tail is ||f||^2 minus the retained part.
LaguerreExpansion expand_monomial(const Exponent& s, std::size_t n);

/// sum_n c_n e_n(x) over the retained coefficients.
Complex evaluate(const LaguerreExpansion& f, double x);

/// Retained part of the inner product, sum_n a_n conj(b_n).
Complex inner(const LaguerreExpansion& a, const LaguerreExpansion& b);

/// (H*)^j 1 = (-1)^j (ln x)^j / j!.
ScaledMonomial hstar_power(int j);

/// J x^s = (1/(1+2s)) x^(-s/(1+2s)).
ScaledMonomial apply_J_monomial(const Exponent& s);

/// J e_n = (-1)^n e_n.
LaguerreExpansion apply_J_expansion(const LaguerreExpansion& f);

}  // namespace mono
