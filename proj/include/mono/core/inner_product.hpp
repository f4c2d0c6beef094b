#pragma once

#include "mono/core/exponent.hpp"

namespace mono {

/// <x^a (ln x)^j, x^b (ln x)^k> = integral_0^1 x^(a + conj b) (ln x)^(j+k) dx
///                            = (-1)^(j+k) (j+k)! / (1 + a + conj b)^(j+k+1).
///
/// Inner products in this library are linear in the first slot and conjugate-linear
/// in the second, so monomial_inner(a, b) = conj(monomial_inner(b, a)).
/// `Scalar` is any complex type constructible from (re, im) doubles.
template <class Scalar>
Scalar monomial_inner_as(const Exponent& a, const Exponent& b) {
  const int m = a.logpow() + b.logpow();
  const Scalar denom = Scalar(1.0 + a.re() + b.re(), a.im() - b.im());
  Scalar result = Scalar(1) / denom;
  for (int j = 1; j <= m; ++j) result *= Scalar(-j) / denom;
  return result;
}

inline Complex monomial_inner(const Exponent& a, const Exponent& b) {
  return monomial_inner_as<Complex>(a, b);
}

}  // namespace mono
