#pragma once

#include <vector>

#include "mono/atomic/atomic.hpp"
#include "mono/laguerre/laguerre.hpp"

namespace mono {

/// P_N f = T_phi T_conj(phi) f on the first N Taylor (equivalently Laguerre)
/// coordinates, where phi_0..phi_{N-1} are the Taylor coefficients of the inner
/// function. Input shorter than N is padded with zeros; longer input is cut.
std::vector<Complex> toeplitz_projection(const std::vector<Complex>& f, const std::vector<Complex>& phi,
                                         std::size_t n);

struct ModelSpaceDistance {
  /// ||T_phi T_conj(phi) f|| at truncation N.
  double distance = 0.0;
  /// The same at N/2.
  double distance_half = 0.0;
  /// |distance - distance_half| / max(distance, 1e-300).
  double sensitivity = 0.0;
  bool instability_warning = false;
  std::size_t n = 0;
};

/// Distance from f to M(mu), through U M(mu) U* = (phi H^2)^perp. An empty measure
/// is treated as M = L^2[0,1] and gives 0. Throws DomainError for N > 8192 or N < 2.
ModelSpaceDistance model_space_distance(const LaguerreExpansion& f, const AtomicMeasure& mu, std::size_t n,
                                        double sensitivity_tol = 0.01);

struct WeakStarRow {
  std::size_t index = 0;
  /// dist(f_j, M(mu_n)) for each test function.
  std::vector<double> distances;
  /// ||phi_n - phi|| over the first N Taylor coefficients.
  double phi_distance = 0.0;
  /// max_{0 <= j <= 8} |m_j(mu_n) - m_j(mu)|.
  double moment_deviation = 0.0;
};

struct WeakStarTable {
  std::vector<WeakStarRow> rows;
  /// dist(f_j, M(mu)).
  std::vector<double> limit_distances;
  /// Moment deviations did not shrink along the sequence.
  bool non_weakstar_warning = false;
  std::size_t n = 0;
};

/// Distances to M(mu_n) and to M(mu) for each test function, at truncation N.
WeakStarTable weakstar_experiment(const std::vector<AtomicMeasure>& mu_seq, const AtomicMeasure& mu_limit,
                                  const std::vector<LaguerreExpansion>& test_functions, std::size_t n);

}  // namespace mono
