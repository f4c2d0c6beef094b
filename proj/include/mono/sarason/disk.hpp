#pragma once

#include <variant>
#include <vector>

#include "mono/core/exponent.hpp"

namespace mono {

/// Point of the open unit disk.
class DiskPoint {
 public:
  /// Throws DomainError unless |z| < 1.
  explicit DiskPoint(Complex z);
  Complex z() const { return z_; }

 private:
  Complex z_;
};

/// Szego kernel k_alpha(z) = 1 / (1 - conj(alpha) z).
inline Complex szego_kernel(Complex alpha, Complex z) { return 1.0 / (1.0 - std::conj(alpha) * z); }

/// Point mass w delta_tau on the unit circle.
struct Atom {
  Complex tau;
  double w;
};

/// S_{tau,w}(z) = exp(-w (tau + z) / (tau - z)).
Complex singular_inner(const Atom& atom, Complex z);

/// First n Taylor coefficients of prod_k S_{tau_k, w_k}, by power-series
/// exponentiation of the exponent -sum w_k (tau_k + z) / (tau_k - z).
std::vector<Complex> singular_inner_taylor(const std::vector<Atom>& atoms, std::size_t n);

/// sum_j c_j k_{alpha_j}.
struct KernelCombination {
  struct Term {
    Complex coef;
    Complex alpha;
  };
  std::vector<Term> terms;
};

/// sum_j c_j U(x^{s_j} (ln x)^{k_j})(z), each term (-1)^k k! (1-z)^k / (1 + s (1-z))^(k+1).
struct MonomialImage {
  struct Term {
    Complex coef;
    Exponent exponent;
  };
  std::vector<Term> terms;
};

/// Truncated power series sum_n c_n z^n.
struct TaylorSeries {
  std::vector<Complex> coeffs;
};

/// scale * prod_k S_{tau_k, w_k}(z).
struct SingularInnerFactor {
  Complex scale{1.0, 0.0};
  std::vector<Atom> atoms;
};

/// Element of H^2 with a closed form where one is known.
class DiskFunction {
 public:
  using Repr = std::variant<KernelCombination, MonomialImage, TaylorSeries, SingularInnerFactor>;

  DiskFunction(Repr repr);

  const Repr& repr() const { return repr_; }
  Complex operator()(Complex z) const;
  /// First n Taylor coefficients (exact for the closed forms up to rounding).
  std::vector<Complex> taylor(std::size_t n) const;

 private:
  Repr repr_;
};

/// Truncated H^2 inner product sum_{n<N} f_n conj(g_n).
Complex h2_inner(const DiskFunction& f, const DiskFunction& g, std::size_t n = 512);

/// <k_alpha, k_beta>_{H^2} = 1 / (1 - conj(alpha) beta), exact.
inline Complex kernel_inner(Complex alpha, Complex beta) { return 1.0 / (1.0 - std::conj(alpha) * beta); }

}  // namespace mono
