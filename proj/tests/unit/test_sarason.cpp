#include <doctest.h>

#include <cmath>

#include "mono/core/inner_product.hpp"
#include "mono/sarason/function_spec.hpp"
#include "mono/sarason/transform.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

std::vector<Complex> disk_points(oracle::Gen& gen, int n, double rmax = 0.9) {
  std::vector<Complex> z;
  for (int i = 0; i < n; ++i) z.push_back(std::polar(rmax * std::sqrt(gen.uniform(0.0, 1.0)), gen.uniform(0.0, 6.283185307179586)));
  return z;
}

SampledFunction power_function(Complex s) {
  return {[s](double x) { return std::pow(x, s); }, {}, s.real() < 0.0, {}};
}

}  // namespace

TEST_CASE("forward transform of monomials") {
  const auto u0 = forward_monomial(Exponent(0.0));
  const auto& kc0 = std::get<KernelCombination>(u0.repr());
  CHECK(kc0.terms[0].coef == Complex(1.0));
  CHECK(kc0.terms[0].alpha == Complex(0.0));

  const auto u1 = forward_monomial(Exponent(1.0));
  const auto& kc1 = std::get<KernelCombination>(u1.repr());
  CHECK(std::abs(kc1.terms[0].coef - 0.5) < 1e-16);
  CHECK(std::abs(kc1.terms[0].alpha - 0.5) < 1e-16);

  const auto ui = forward_monomial(Exponent(0.0, 1.0));
  const auto& kci = std::get<KernelCombination>(ui.repr());
  CHECK(std::abs(kci.terms[0].coef - 1.0 / Complex(1.0, 1.0)) < 1e-16);
  CHECK(std::abs(kci.terms[0].alpha - Complex(0.0, -1.0) / Complex(1.0, -1.0)) < 1e-16);

  oracle::Gen gen(5);
  for (Complex z : disk_points(gen, 10)) {
    const auto q = forward_quadrature(power_function(kI), DiskPoint(z));
    CHECK(std::abs(q.value - ui(z)) < 1e-9);
  }
}

TEST_CASE("forward transform of log-monomials matches quadrature") {
  oracle::Gen gen(6);
  for (int k = 1; k <= 3; ++k) {
    const Exponent b(0.3, -0.7, k);
    const auto u = forward_monomial(b);
    const auto f = FunctionSpec::monomial(b).sampled();
    for (Complex z : disk_points(gen, 5, 0.8)) {
      CHECK(std::abs(forward_quadrature(f, DiskPoint(z)).value - u(z)) < 1e-9);
    }
    // Taylor coefficients are the pairings with e_n: check the first against the value at 0.
    CHECK(std::abs(u.taylor(4)[0] - u(0.0)) < 1e-14);
  }
}

TEST_CASE("indicator transform") {
  CHECK(std::abs(forward_indicator(1.0)(Complex(0.3, 0.2)) - 1.0) < 1e-15);
  const Complex z(0.1, -0.4);
  const Complex expected = std::exp(-1.0) * std::exp(-(1.0 + z) / (1.0 - z));
  CHECK(std::abs(forward_indicator(std::exp(-2.0))(z) - expected) < 1e-15);
  CHECK(std::abs(forward_indicator(0.5)(0.0) - 0.5) < 1e-15);
  CHECK_THROWS_AS(forward_indicator(0.0), DomainError);
  CHECK_THROWS_AS(forward_indicator(1.5), DomainError);

  const auto chi = FunctionSpec::indicator(0.0, 0.25).sampled();
  const auto q = forward_quadrature(chi, DiskPoint(0.3));
  CHECK(std::abs(q.value - 0.5 * std::exp(0.5 * std::log(0.25) * (1.3 / 0.7))) < 1e-8);
}

TEST_CASE("forward quadrature basics") {
  const SampledFunction one{[](double) { return Complex(1.0); }, {}, false, 1.0};
  CHECK(std::abs(forward_quadrature(one, DiskPoint(0.0)).value - 1.0) < 1e-12);
  oracle::Gen gen(8);
  for (Complex z : disk_points(gen, 10)) {
    const Complex expected = 0.5 * szego_kernel(0.5, z);
    CHECK(std::abs(forward_quadrature(power_function(1.0), DiskPoint(z)).value - expected) < 1e-10);
  }
  CHECK_THROWS_AS(DiskPoint(1.0), DomainError);
}

TEST_CASE("Laplace route agrees with the direct routes") {
  const SampledFunction one{[](double) { return Complex(1.0); }, {}, false, 1.0};
  CHECK(std::abs(laplace_bridge(one, DiskPoint(0.0)).value - 1.0) < 1e-12);
  oracle::Gen gen(9);
  for (int n = 0; n <= 4; ++n) {
    const auto u = forward_monomial(Exponent(double(n)));
    for (Complex z : disk_points(gen, 10)) {
      CHECK(std::abs(laplace_bridge(power_function(double(n)), DiskPoint(z)).value - u(z)) < 1e-9);
    }
  }
  for (double s : {0.1, 0.5, 0.9}) {
    const auto chi = FunctionSpec::indicator(0.0, s).sampled();
    const auto u = forward_indicator(s);
    for (Complex z : disk_points(gen, 5)) {
      CHECK(std::abs(laplace_bridge(chi, DiskPoint(z)).value - u(z)) < 1e-8);
      CHECK(std::abs(forward_quadrature(chi, DiskPoint(z)).value - u(z)) < 1e-8);
    }
  }
}

TEST_CASE("inverse transform of kernels") {
  const auto k0 = inverse_kernel(DiskPoint(0.0));
  CHECK(k0.constant == Complex(1.0));
  CHECK(k0.exponent == Exponent(0.0));
  const auto kh = inverse_kernel(DiskPoint(0.5));
  CHECK(std::abs(kh.constant - 2.0) < 1e-15);
  CHECK(std::abs(kh.exponent.value() - 1.0) < 1e-15);

  const Complex alpha(0.0, 0.5);
  const auto k = inverse_kernel(DiskPoint(alpha));
  CHECK(std::abs(k.constant - 1.0 / (1.0 + Complex(0.0, 0.5))) < 1e-15);
  for (int n = 0; n <= 5; ++n) {
    // <U* k_alpha, x^n> = <k_alpha, U x^n> = conj((U x^n)(alpha)).
    const Complex lhs = k.constant * monomial_inner(k.exponent, Exponent(double(n)));
    const Complex rhs = std::conj(forward_monomial(Exponent(double(n)))(alpha));
    CHECK(std::abs(lhs - rhs) < 1e-14);
  }
}

TEST_CASE("round trip inverse_kernel after forward_monomial") {
  oracle::Gen gen(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Exponent b(gen.power());
    const auto u = forward_monomial(b);
    const auto& term = std::get<KernelCombination>(u.repr()).terms[0];
    const auto back = inverse_kernel(DiskPoint(term.alpha));
    CHECK(std::abs(back.exponent.value() - b.value()) < 1e-12 * (1.0 + std::abs(b.value())));
    CHECK(std::abs(term.coef * back.constant - 1.0) < 1e-12);
  }
}

TEST_CASE("series inverse transform") {
  const Complex alpha(0.3, -0.4);
  const auto d = kernel_derivatives_at_1(alpha, 200);
  const auto k = inverse_kernel(DiskPoint(alpha));
  // Cauchy bound for k_alpha on |z - 1| = r with r < |1 - 1/conj(alpha)|.
  const double r = 0.5 * std::abs(1.0 - 1.0 / std::conj(alpha));
  const double m = 1.0 / (std::abs(1.0 - std::conj(alpha)) - std::abs(alpha) * r);
  for (double x : {0.05, 0.2, 0.5, 0.9, 1.0}) {
    const auto v = inverse_analytic(d, x, CauchyBound{m, r});
    CHECK(std::abs(v.value - k(x)) < 1e-12);
    CHECK(v.rigorous);
    CHECK_FALSE(v.divergence_warning);
  }

  const std::vector<Complex> ones(80, 1.0);
  oracle::Gen gen(11);
  for (int i = 0; i < 20; ++i) {
    const double x = gen.uniform(0.05, 1.0);
    const auto v = inverse_analytic(ones, x, CauchyBound{std::exp(1.0), 1.0});
    CHECK(std::abs(v.value - std::cyl_bessel_j(0.0, 2.0 * std::sqrt(-std::log(x)))) < 1e-9);
    CHECK(v.tail_bound < 1e-12);
  }

  const std::vector<Complex> constant{1.0, 0.0, 0.0, 0.0};
  CHECK(std::abs(inverse_analytic(constant, 0.37).value - 1.0) < 1e-15);

  const std::vector<Complex> grows{1.0, 1e3, 1e7, 1e12};
  CHECK(inverse_analytic(grows, 0.1).divergence_warning);
}

TEST_CASE("series inverse continues across the complex plane") {
  const Complex alpha(-0.2, 0.1);
  const auto d = kernel_derivatives_at_1(alpha, 400);
  const auto k = inverse_kernel(DiskPoint(alpha));
  // Path around the origin avoiding the cut; the continuation is c x^s with the principal branch.
  Complex prev = inverse_analytic(d, Complex(1.0, 0.0)).value;
  for (int i = 1; i <= 60; ++i) {
    const Complex x = std::polar(1.0 - 0.006 * i, i * 0.05);
    const Complex v = inverse_analytic(d, x).value;
    CHECK(std::abs(v - k.constant * std::exp(k.exponent.value() * std::log(x))) < 1e-10);
    CHECK(std::abs(v - prev) < 0.1);
    prev = v;
  }
  CHECK_THROWS_AS(inverse_analytic(d, Complex(-0.5, 0.0)), DomainError);
}

TEST_CASE("reflected formula in its stated form differs from the kernel relation") {
  const Complex alpha(0.4, 0.2);
  const auto d = kernel_derivatives_at_1(alpha, 200);
  const auto refl = reflect_kernel_inverse(DiskPoint(alpha));
  const double x = 0.3;
  const Complex stated = inverse_analytic_reflected_as_stated(d, x).value;
  CHECK(std::abs(stated - refl(x)) > 1e-3);
}

TEST_CASE("moments and interpolation values") {
  std::vector<Complex> w;
  for (int n = 0; n < 6; ++n) w.push_back(1.0 / (n + 1.0));
  for (const auto v : moment_interpolation(w, MomentDirection::MomentsToValues))
    CHECK(std::abs(v - 1.0) < 1e-15);

  const double s = 0.4;
  std::vector<Complex> chi;
  for (int n = 0; n < 6; ++n) chi.push_back(std::pow(s, n + 1) / (n + 1.0));
  const auto vals = moment_interpolation(chi, MomentDirection::MomentsToValues);
  for (int n = 0; n < 6; ++n) {
    CHECK(std::abs(vals[n] - std::pow(s, n + 1)) < 1e-15);
    CHECK(std::abs(forward_indicator(s)(n / (n + 1.0)) - vals[n]) < 1e-13);
  }
  const auto back = moment_interpolation(vals, MomentDirection::ValuesToMoments);
  for (int n = 0; n < 6; ++n) CHECK(std::abs(back[n] - chi[n]) < 1e-15);
  CHECK(moment_interpolation(std::vector<Complex>(3, 0.0), MomentDirection::ValuesToMoments)[2] ==
        Complex(0.0));
}

TEST_CASE("the transform is isometric on low-degree polynomials") {
  const int n = 9;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex g = h2_inner(forward_monomial(Exponent(double(i))), forward_monomial(Exponent(double(j))), 512);
      CHECK(std::abs(g - 1.0 / (1.0 + i + j)) < 1e-9);
    }
  }
  // Complex exponents and log powers, compared with the L^2 pairing.
  oracle::Gen gen(12);
  for (int t = 0; t < 20; ++t) {
    const Exponent a(gen.power(0.0, 2.0, 2.0), gen.integer(0, 2));
    const Exponent b(gen.power(0.0, 2.0, 2.0), gen.integer(0, 2));
    const Complex g = h2_inner(forward_monomial(a), forward_monomial(b), 4000);
    CHECK(std::abs(g - monomial_inner(a, b)) < 1e-9 * std::max(1.0, std::abs(g)));
  }
}

TEST_CASE("singular inner Taylor coefficients") {
  const std::vector<Atom> atoms{{1.0, 0.5}, {std::polar(1.0, 2.0), 0.3}};
  const auto c = singular_inner_taylor(atoms, 400);
  for (Complex z : {Complex(0.0), Complex(0.3, 0.2), Complex(-0.5, 0.1)}) {
    Complex s = 0.0;
    for (std::size_t m = c.size(); m-- > 0;) s = s * z + c[m];
    CHECK(std::abs(s - singular_inner(atoms[0], z) * singular_inner(atoms[1], z)) < 1e-13);
  }
  double norm = 0.0;
  for (auto v : singular_inner_taylor({{1.0, 0.25}}, 8192)) norm += std::norm(v);
  CHECK(norm <= 1.0 + 1e-12);
  CHECK(norm > 0.99);
}

TEST_CASE("function specs") {
  const auto lin = FunctionSpec::table({0.5, 1.0}, {0.5, 1.0});
  CHECK(std::abs(lin.sampled()(0.75) - 0.75) < 1e-15);
  CHECK(std::abs(lin.sampled()(0.1) - 0.5) < 1e-15);
  CHECK_FALSE(lin.closed_form().has_value());
  // Exact transform of the clamped table: 0.5 on (0, 0.5] plus x on (0.5, 1].
  const Complex z(0.2, 0.3);
  const auto expected = FunctionSpec::combination(
      {FunctionSpec::indicator(0.0, 0.5, Exponent(0.0), 0.5), FunctionSpec::indicator(0.5, 1.0, Exponent(1.0))});
  CHECK(std::abs(lin.transform(DiskPoint(z)).value - forward_quadrature(expected.sampled(), DiskPoint(z)).value) < 1e-10);

  const auto chi = FunctionSpec::indicator(0.25, 0.75);
  CHECK(chi.sampled().norm_sq.value() == doctest::Approx(0.5));
  CHECK(std::abs(chi.transform(DiskPoint(z)).value - forward_quadrature(chi.sampled(), DiskPoint(z)).value) < 1e-9);
  CHECK_THROWS_AS(FunctionSpec::indicator(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(FunctionSpec::table({0.5, 0.2}, {1.0, 2.0}), DomainError);
}
