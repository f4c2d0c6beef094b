#pragma once

// Precision-generic pieces of the Gram solves. Included by gram.cpp and
// distance.cpp only, which instantiate them for double, 100- and 250-digit scalars.

#include <cmath>

#include "mono/core/gram.hpp"
#include "mono/extended.hpp"

namespace mono::detail {

template <class Scalar>
double to_double_real(const Scalar& x) {
  using std::real;
  return static_cast<double>(real(x));
}

template <class Scalar>
double max_abs_column_sum(const Matrix<Scalar>& m) {
  using std::abs;
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) sum += static_cast<double>(abs(m(i, j)));
    best = std::max(best, sum);
  }
  return best;
}

/// ||G||_1 ||G^-1||_1 with the inverse formed from a partial-pivot LU in `Scalar`.
template <class Scalar>
double lu_condition_1(const Matrix<Scalar>& g) {
  const Eigen::PartialPivLU<Matrix<Scalar>> lu(g);
  const Matrix<Scalar> inv = lu.inverse();
  return max_abs_column_sum(g) * max_abs_column_sum(inv);
}

template <class Scalar>
struct NormalSolution {
  Vector<Scalar> coefficients;
  Scalar projection_norm_sq;  // Re <P f, f>, stored in the complex scalar type
  double relative_residual = 0.0;
};

/// Solves G a = b and returns a with the quadratic form b^H a = ||P f||^2.
template <class Scalar>
NormalSolution<Scalar> solve_normal(const Matrix<Scalar>& g, const Vector<Scalar>& b) {
  using std::abs;
  using std::real;
  const Eigen::PartialPivLU<Matrix<Scalar>> lu(g);
  NormalSolution<Scalar> out;
  out.coefficients = lu.solve(b);
  out.projection_norm_sq = Scalar(real(b.dot(out.coefficients)));
  const Vector<Scalar> r = g * out.coefficients - b;
  double rn = 0.0, bn = 0.0;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    rn = std::max(rn, static_cast<double>(abs(r(i))));
    bn = std::max(bn, static_cast<double>(abs(b(i))));
  }
  out.relative_residual = bn > 0.0 ? rn / bn : rn;
  return out;
}

}  // namespace mono::detail
