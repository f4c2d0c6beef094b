#pragma once

#include <vector>

#include "mono/laguerre/laguerre.hpp"
#include "mono/sarason/sampled.hpp"

namespace mono {

/// Finite combination sum_j c_j x^{s_j} (ln x)^{k_j}; terms may repeat.
struct MonomialCombination {
  struct Term {
    Complex coef;
    Exponent exponent;
  };
  std::vector<Term> terms;

  Complex operator()(double x) const;
  /// Laguerre coordinates c_0..c_n of the combination, tails added as a bound.
  LaguerreExpansion expand(std::size_t n) const;
};

enum class HardyOp { H, X, V };

const char* to_string(HardyOp op);
HardyOp hardy_op_from_string(const std::string& name);

/// Hf(x) = (1/x) int_0^x f. On monomials H x^s = x^s / (s+1); log powers follow by
/// differentiating in s.
MonomialCombination apply_H(const MonomialCombination& f);
/// Xf(x) = x f(x).
MonomialCombination apply_X(const MonomialCombination& f);
/// Vf(x) = int_0^x f = X H f.
MonomialCombination apply_V(const MonomialCombination& f);
MonomialCombination apply(HardyOp op, const MonomialCombination& f);

/// Action on Laguerre coordinates through the matrices of `hat_matrix`. Coefficients
/// whose exact value needs input beyond the truncation are dropped, and
/// `tail_norm_sq` becomes an upper bound (operator norm times the neglected part).
LaguerreExpansion apply(HardyOp op, const LaguerreExpansion& f);

/// Pointwise evaluators; H and V integrate f(x u) over u in (0, 1] by quadrature.
SampledFunction apply(HardyOp op, const SampledFunction& f);

/// Matrix of the transformed operator on span{z^0, ..., z^(N-1)}, acting on
/// coefficient columns. With gamma(z) = 1/(2-z) and (C_gamma)_{km} = C(m+k-1, k) 2^(-m-k):
///   H: I - S*                 (entries 1 on the diagonal, -1 above it)
///   X: S* C_gamma^*           X[n][k] = C_gamma[k][n+1]
///   V: (I - S*) C_gamma^*     V[n][k] = C_gamma[k][n] - C_gamma[k][n+1]
/// The last row of H and of V couples to the coefficient N, outside the truncation.
/// Throws DomainError for N > 2048.
Eigen::MatrixXd hat_matrix(HardyOp op, std::size_t n);

/// (C_gamma)_{km}, the k-th Taylor coefficient of gamma^m.
double composition_entry(std::size_t k, std::size_t m);

}  // namespace mono
