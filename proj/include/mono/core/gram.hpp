#pragma once

#include <cstddef>

#include "mono/core/inner_product.hpp"

namespace mono {

/// G(i, j) = <m_j, m_i>; for simple entries this is the Cauchy matrix
/// 1 / (1 + s_j + conj s_i). With coefficients a and b_i = <f, m_i>, the normal
/// equations of the least-squares problem read G a = b.
template <class Scalar>
Matrix<Scalar> gram_matrix(const MonomialSet& set) {
  const auto n = static_cast<Eigen::Index>(set.size());
  Matrix<Scalar> g(n, n);
  // One triangle is computed and mirrored so that g is exactly Hermitian.
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      g(i, j) = monomial_inner_as<Scalar>(set[j], set[i]);
      if (j < i) g(j, i) = conj(g(i, j));
    }
  return g;
}

struct GramOptions {
  std::size_t max_size = 64;
  Precision precision = Precision::Double;
  /// Condition estimate above which solves switch to extended precision.
  double extended_threshold = 1e12;
};

/// Spectral condition number estimate of the Gram matrix of `set`.
///
/// When the double-precision eigenvalues are trustworthy (lambda_min / lambda_max
/// above 1e-8) the ratio lambda_max / lambda_min is returned. Otherwise the
/// 1-norm condition ||G||_1 ||G^-1||_1 is computed from an LU factorization in
/// 100-digit arithmetic (250 digits if that exceeds 1e85). The 1-norm value is
/// within a factor n of the spectral one.
double gram_condition_estimate(const MonomialSet& set);

/// Positive definiteness certified by a Cholesky factorization in 100-digit arithmetic.
bool gram_is_positive_definite(const MonomialSet& set);

class GramSystem {
 public:
  GramSystem(MonomialSet set, CMatrix matrix, double condition)
      : set_(std::move(set)), matrix_(std::move(matrix)), condition_(condition) {}

  const MonomialSet& set() const { return set_; }
  const CMatrix& matrix() const { return matrix_; }
  double condition_estimate() const { return condition_; }

 private:
  MonomialSet set_;
  CMatrix matrix_;
  double condition_;
};

/// Throws DomainError for an empty set or one larger than `opt.max_size`.
GramSystem gram_build(const MonomialSet& set, const GramOptions& opt = {});

}  // namespace mono
