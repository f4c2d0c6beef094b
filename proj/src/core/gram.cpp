#include "mono/core/gram.hpp"

#include "solve_detail.hpp"

namespace mono {

double gram_condition_estimate(const MonomialSet& set) {
  if (set.empty()) return 1.0;
  const CMatrix g = gram_matrix<Complex>(set);
  const Eigen::SelfAdjointEigenSolver<CMatrix> eig(g, Eigen::EigenvaluesOnly);
  const double lmin = eig.eigenvalues().minCoeff();
  const double lmax = eig.eigenvalues().maxCoeff();
  if (lmin > 1e-8 * lmax) return lmax / lmin;

  const double ext = detail::lu_condition_1(gram_matrix<ExtComplex>(set));
  if (ext < 1e85) return ext;
  return detail::lu_condition_1(gram_matrix<WideComplex>(set));
}

bool gram_is_positive_definite(const MonomialSet& set) {
  if (set.empty()) return true;
  const Matrix<ExtComplex> g = gram_matrix<ExtComplex>(set);
  const Eigen::LLT<Matrix<ExtComplex>> llt(g);
  if (llt.info() != Eigen::Success) return false;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i)
    if (!(real(l(i, i)) > 0)) return false;
  return true;
}

GramSystem gram_build(const MonomialSet& set, const GramOptions& opt) {
  if (set.empty()) throw DomainError("gram_build: monomial set is empty");
  if (set.size() > opt.max_size)
    throw DomainError("gram_build: set of size " + std::to_string(set.size()) +
                      " exceeds the limit " + std::to_string(opt.max_size));
  return GramSystem(set, gram_matrix<Complex>(set), gram_condition_estimate(set));
}

}  // namespace mono
