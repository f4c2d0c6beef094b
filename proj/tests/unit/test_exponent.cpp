#include <doctest.h>

#include "mono/core/inner_product.hpp"
#include "oracles.hpp"

using namespace mono;

TEST_CASE("exponent rejects points outside the half-plane") {
  CHECK_THROWS_AS(Exponent(-0.5), DomainError);
  CHECK_THROWS_AS(Exponent(-0.7, 1.0), DomainError);
  CHECK_THROWS_AS(Exponent(0.0, 0.0, -1), DomainError);
  CHECK_THROWS_AS(Exponent(std::nan(""), 0.0), DomainError);
  CHECK_NOTHROW(Exponent(-0.49, 5.0, 2));
}

TEST_CASE("norm of a log-monomial") {
  CHECK(Exponent(1.0).norm_sq() == doctest::Approx(1.0 / 3.0));
  CHECK(Exponent(0.0, 0.0, 1).norm_sq() == doctest::Approx(2.0));
  CHECK(Exponent(0.5, 2.0, 2).norm_sq() == doctest::Approx(24.0 / 32.0));
}

TEST_CASE("monomial set validation") {
  CHECK_NOTHROW(MonomialSet({Exponent(1.0), Exponent(1.0, 0.0, 1), Exponent(2.0)}));
  CHECK_THROWS_AS(MonomialSet({Exponent(1.0), Exponent(1.0)}), DomainError);
  CHECK_THROWS_AS(MonomialSet({Exponent(1.0), Exponent(1.0, 0.0, 2)}), DomainError);
  CHECK_THROWS_AS(MonomialSet({Exponent(1.0, 0.0, 1)}), DomainError);

  const MonomialSet s = MonomialSet::simple({0.0, 1.0}).with(1.0).with(1.0);
  REQUIRE(s.size() == 4);
  CHECK(s[3].logpow() == 2);
  CHECK_FALSE(s.all_simple());
}

TEST_CASE("monomial inner product examples") {
  CHECK(std::abs(monomial_inner(Exponent(1.0), Exponent(1.0)) - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(monomial_inner(Exponent(0.0, 0.0, 1), Exponent(0.0, 0.0, 1)) - 2.0) < 1e-15);
  const Complex expected = 1.0 / Complex(1.0, 1.0);
  CHECK(std::abs(monomial_inner(Exponent(0.0, 1.0), Exponent(0.0)) - expected) < 1e-15);
  CHECK(std::abs(oracle::monomial_inner({0.0, 1.0}, 0, 0.0, 0) - expected) < 1e-12);
}

TEST_CASE("monomial inner product is Hermitian and matches quadrature") {
  oracle::Gen gen(20241);
  for (int trial = 0; trial < 60; ++trial) {
    const Complex a = gen.power(-0.45, 2.0);
    const Complex b = gen.power(-0.45, 2.0);
    if (a.real() + b.real() <= -0.9) continue;
    const int j = gen.integer(0, 2);
    const int k = gen.integer(0, 2);
    const Exponent ea(a, j), eb(b, k);
    const Complex ab = monomial_inner(ea, eb);
    const Complex ba = monomial_inner(eb, ea);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-14 * std::abs(ab));
    const Complex q = oracle::monomial_inner(a, j, b, k);
    CHECK(std::abs(ab - q) < 1e-10 * std::max(1.0, std::abs(q)));
  }
}
