#include "mono/atomic/model_space.hpp"

#include <algorithm>
#include <cmath>

namespace mono {
namespace {

double l2_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double distance_at(const std::vector<Complex>& f, const std::vector<Complex>& phi, std::size_t n) {
  return l2_norm(toeplitz_projection(f, phi, n));
}

}  // namespace

std::vector<Complex> toeplitz_projection(const std::vector<Complex>& f, const std::vector<Complex>& phi,
                                         std::size_t n) {
  if (phi.size() < n) throw DomainError("toeplitz_projection: need N Taylor coefficients of phi");
  std::vector<Complex> g(n, 0.0);
  const std::size_t m = std::min(n, f.size());
  // (T_conj(phi) f)_k = sum_j conj(phi_j) f_{k+j}
  for (std::size_t k = 0; k < m; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; k + j < m; ++j) s += std::conj(phi[j]) * f[k + j];
    g[k] = s;
  }
  // (T_phi g)_k = sum_j phi_j g_{k-j}
  std::vector<Complex> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += phi[j] * g[k - j];
    out[k] = s;
  }
  return out;
}

ModelSpaceDistance model_space_distance(const LaguerreExpansion& f, const AtomicMeasure& mu, std::size_t n,
                                        double sensitivity_tol) {
  if (n > 8192) throw DomainError("model_space_distance: N must not exceed 8192");
  if (n < 2) throw DomainError("model_space_distance: N must be at least 2");
  ModelSpaceDistance out;
  out.n = n;
  if (mu.empty()) return out;
  const auto phi = singular_inner_taylor(mu.atoms(), n);
  out.distance = distance_at(f.coeffs, phi, n);
  out.distance_half = distance_at(f.coeffs, phi, n / 2);
  out.sensitivity = std::abs(out.distance - out.distance_half) / std::max(out.distance, 1e-300);
  out.instability_warning = out.sensitivity > sensitivity_tol;
  return out;
}

WeakStarTable weakstar_experiment(const std::vector<AtomicMeasure>& mu_seq, const AtomicMeasure& mu_limit,
                                  const std::vector<LaguerreExpansion>& test_functions, std::size_t n) {
  if (n > 8192 || n < 2) throw DomainError("weakstar_experiment: N must lie in [2, 8192]");
  constexpr int kMoments = 8;
  WeakStarTable out;
  out.n = n;
  const auto phi = singular_inner_taylor(mu_limit.atoms(), n);
  for (const auto& f : test_functions)
    out.limit_distances.push_back(mu_limit.empty() ? 0.0 : distance_at(f.coeffs, phi, n));
  for (std::size_t i = 0; i < mu_seq.size(); ++i) {
    const auto& mu = mu_seq[i];
    WeakStarRow row;
    row.index = i + 1;
    const auto phi_n = singular_inner_taylor(mu.atoms(), n);
    for (const auto& f : test_functions)
      row.distances.push_back(mu.empty() ? 0.0 : distance_at(f.coeffs, phi_n, n));
    double d = 0.0;
    for (std::size_t k = 0; k < n; ++k) d += std::norm(phi_n[k] - phi[k]);
    row.phi_distance = std::sqrt(d);
    for (int j = 0; j <= kMoments; ++j)
      row.moment_deviation = std::max(row.moment_deviation, std::abs(mu.moment(j) - mu_limit.moment(j)));
    out.rows.push_back(std::move(row));
  }
  if (!out.rows.empty()) {
    const double first = out.rows.front().moment_deviation, last = out.rows.back().moment_deviation;
    out.non_weakstar_warning = last > 1e-3 && !(last < first);
  }
  return out;
}

}  // namespace mono
