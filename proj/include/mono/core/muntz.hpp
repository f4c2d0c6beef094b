#pragma once

#include <string>
#include <vector>

#include "mono/core/exponent.hpp"

namespace mono {

enum class Criterion {
  Classical,     ///< sum 1/s_k over strictly increasing nonnegative integers
  RealSzasz,     ///< sum (2 s_k + 1) / ((2 s_k + 1)^2 + 1) over real exponents
  ComplexSzasz,  ///< sum (2 Re s_k + 1) / |s_k + 1|^2
};

enum class Density { Dense, NotDense, Undetermined };

const char* to_string(Criterion c);
const char* to_string(Density d);
Criterion criterion_from_string(const std::string& name);

/// Exponent sequence, either generated by a closed-form rule or listed explicitly.
/// Indices start at k = 1.
struct SequenceSpec {
  enum class Kind {
    Affine,     ///< s_k = a k + b
    Geometric,  ///< s_k = a r^k
    Power,      ///< s_k = a k^p + b
    Explicit,   ///< s_k = values[k - 1]
  };

  Kind kind = Kind::Explicit;
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex r{2.0, 0.0};
  double p = 1.0;
  std::vector<Complex> values;

  static SequenceSpec affine(Complex a, Complex b);
  static SequenceSpec geometric(Complex a, Complex r);
  static SequenceSpec power(Complex a, double p, Complex b = 0.0);
  static SequenceSpec explicit_list(std::vector<Complex> values);

  /// Number of available terms: unbounded for generated kinds.
  std::size_t available() const;
  Complex term(std::size_t k) const;
  /// The first n terms as a set of simple exponents (throws DomainError outside the half-plane).
  MonomialSet first(std::size_t n) const;
};

struct VerdictOptions {
  std::size_t n_terms = 1000;
  /// Number of trailing terms whose contribution is reported as `tail_increment`.
  std::size_t tail_window = 100;
  /// Partial sums above this bound are accepted as evidence of divergence.
  double divergence_bound = 100.0;
};

struct DensityVerdict {
  Density density = Density::Undetermined;
  std::vector<double> partial_sums;
  Criterion criterion = Criterion::ComplexSzasz;
  /// Which certificate produced the verdict ("harmonic", "p-series", "geometric",
  /// "partial-sum-bound" or "none").
  std::string certificate;
  /// Sum of the last `tail_window` terms.
  double tail_increment = 0.0;
};

/// Criterion applied to a sequence that does not satisfy its hypotheses.
class WrongCriterionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Term of the series for `criterion` at exponent s (the classical series skips s = 0).
double muntz_term(Criterion criterion, Complex s);

/// Partial sums plus a three-valued verdict. Generated sequences are decided by
/// comparison patterns; explicit lists only through the partial-sum bound.
DensityVerdict muntz_verdict(const SequenceSpec& seq, Criterion criterion,
                             const VerdictOptions& opt = {});

}  // namespace mono
