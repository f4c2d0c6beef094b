#pragma once

#include "mono/core/exponent.hpp"

namespace mono {

/// constant * x^s (ln x)^k.
struct ScaledMonomial {
  Complex constant;
  Exponent exponent;

  /// Throws DomainError unless 0 < x <= 1.
  Complex operator()(double x) const;
};

}  // namespace mono
