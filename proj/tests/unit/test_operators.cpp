#include <doctest.h>

#include <cmath>

#include "mono/core/inner_product.hpp"
#include "mono/operators/hardy_operators.hpp"
#include "mono/operators/multiplier.hpp"
#include "mono/operators/unitary.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

MonomialCombination mono_term(Complex s, Complex c = 1.0, int k = 0) { return {{{c, Exponent(s, k)}}}; }

LaguerreExpansion unit_vector(std::size_t n, std::size_t size) {
  LaguerreExpansion e;
  e.coeffs.assign(size, 0.0);
  e.coeffs[n] = 1.0;
  return e;
}

AutomorphismParams random_params(oracle::Gen& gen) {
  AutomorphismParams p;
  p.a = gen.uniform(0.3, 2.0);
  p.b = gen.uniform(-1.5, 1.5);
  p.c = gen.uniform(0.0, 1.5);
  p.d = (1.0 + p.b * p.c) / p.a;
  return p;
}

}  // namespace

TEST_CASE("monomial actions of H, X and V") {
  const auto h2 = apply_H(mono_term(2.0));
  REQUIRE(h2.terms.size() == 1);
  CHECK(std::abs(h2.terms[0].coef - 1.0 / 3.0) < 1e-16);
  CHECK(std::abs(apply_H(mono_term(0.0)).terms[0].coef - 1.0) < 1e-16);

  const auto v1 = apply_V(mono_term(0.0));
  CHECK(v1.terms[0].exponent == Exponent(1.0));
  CHECK(std::abs(v1.terms[0].coef - 1.0) < 1e-16);

  const auto xi = apply_X(mono_term(kI));
  CHECK(xi.terms[0].exponent == Exponent(Complex(1.0, 1.0)));

  const auto vi = apply_V(mono_term(kI));
  CHECK(std::abs(vi.terms[0].coef - 1.0 / Complex(1.0, 1.0)) < 1e-16);
  const double nsq = std::norm(vi.terms[0].coef) * monomial_inner(vi.terms[0].exponent, vi.terms[0].exponent).real();
  CHECK(nsq == doctest::Approx(0.5 / 3.0).epsilon(1e-14));
}

TEST_CASE("H on log-monomials matches the integral definition") {
  const auto f = mono_term(Complex(0.2, 0.6), Complex(1.0, -2.0), 2);
  const auto hf = apply_H(f);
  for (double x : {0.05, 0.4, 1.0}) {
    const Complex q = oracle::integrate([&](double t) { return f(t); }, 0.0, x) / x;
    CHECK(std::abs(hf(x) - q) < 1e-10);
  }
}

TEST_CASE("sampled actions agree with monomial actions") {
  const auto f = mono_term(Complex(-0.3, 1.0), 2.0, 1);
  const SampledFunction sf{[f](double x) { return f(x); }, {}, true, {}};
  for (HardyOp op : {HardyOp::H, HardyOp::X, HardyOp::V}) {
    const auto exact = apply(op, f);
    const auto sampled = apply(op, sf);
    for (double x : {0.01, 0.3, 0.9}) CHECK(std::abs(sampled(x) - exact(x)) < 1e-9);
  }
}

TEST_CASE("hat matrix of H and its orientation") {
  const Eigen::MatrixXd h = hat_matrix(HardyOp::H, 3);
  Eigen::MatrixXd expected(3, 3);
  expected << 1, -1, 0, 0, 1, -1, 0, 0, 1;
  CHECK((h - expected).norm() == 0.0);

  const auto he0 = apply(HardyOp::H, unit_vector(0, 8));
  CHECK(std::abs(he0.coeffs[0] - 1.0) < 1e-16);
  for (std::size_t k = 1; k < 8; ++k) CHECK(he0.coeffs[k] == Complex(0.0));

  // H e_n = e_n - e_{n-1}, compared with quadrature of (1/x) int_0^x e_n.
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto he = apply(HardyOp::H, unit_vector(n, 10));
    int nonzero = 0;
    for (const auto& c : he.coeffs) nonzero += c != 0.0;
    CHECK(nonzero == 2);
    for (double x : {0.1, 0.6}) {
      const Complex q = oracle::integrate([&](double t) { return Complex(eval_e(int(n), t)); }, 0.0, x) / x;
      CHECK(std::abs(evaluate(he, x) - q) < 1e-10);
    }
  }
  CHECK_THROWS_AS(hat_matrix(HardyOp::X, 4096), DomainError);
}

TEST_CASE("composition matrix entries") {
  // Column m of C_gamma holds the Taylor coefficients of (2 - z)^-m.
  CHECK(composition_entry(0, 0) == 1.0);
  CHECK(composition_entry(3, 0) == 0.0);
  CHECK(composition_entry(2, 1) == doctest::Approx(0.125));
  CHECK(composition_entry(1, 2) == doctest::Approx(2.0 / 8.0));
  CHECK(composition_entry(2, 3) == doctest::Approx(6.0 / 32.0));
}

TEST_CASE("monomial route equals hat-matrix route") {
  const std::size_t n = 256;
  for (HardyOp op : {HardyOp::H, HardyOp::X, HardyOp::V}) {
    const Eigen::MatrixXd m = hat_matrix(op, n);
    for (Complex s : {Complex(0.0), Complex(1.0), Complex(0.0, 1.0), Complex(0.5, 2.0)}) {
      const auto in = expand_monomial(Exponent(s), n - 1);
      const auto direct = apply(op, mono_term(s)).expand(n - 1);
      CVector v(n);
      for (std::size_t k = 0; k < n; ++k) v(k) = in.coeffs[k];
      const CVector w = m.cast<Complex>() * v;
      double err = 0.0;
      for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(w(k) - direct.coeffs[k]));
      CHECK(err < 1e-8);
      const auto via = apply(op, in);
      for (std::size_t k = 0; k + 1 < n; ++k) CHECK(std::abs(via.coeffs[k] - direct.coeffs[k]) < 1e-8);
    }
  }
}

TEST_CASE("H does not commute with X") {
  oracle::Gen gen(41);
  for (int t = 0; t < 20; ++t) {
    const Complex s = gen.power();
    const auto hx = apply_H(apply_X(mono_term(s)));
    const auto xh = apply_X(apply_H(mono_term(s)));
    const Complex expected = 1.0 / (s + 2.0) - 1.0 / (s + 1.0);
    CHECK(hx.terms[0].exponent == xh.terms[0].exponent);
    CHECK(std::abs(hx.terms[0].coef - xh.terms[0].coef - expected) < 1e-14);
    const auto hv = apply_H(apply_V(mono_term(s)));
    const auto vh = apply_V(apply_H(mono_term(s)));
    CHECK(std::abs(hv.terms[0].coef - vh.terms[0].coef) > 1e-6);
  }
}

TEST_CASE("unitary operators from automorphisms") {
  const auto id = unitary_from_automorphism(AutomorphismParams::identity());
  CHECK(std::abs(id.tau(Complex(0.3, 1.0)) - Complex(0.3, 1.0)) < 1e-15);
  CHECK(std::abs(id.c(Complex(0.3, 1.0)) - 1.0) < 1e-15);

  const auto j = unitary_from_automorphism(AutomorphismParams::involution());
  for (Complex s : {Complex(0.0), Complex(1.0), Complex(0.2, -3.0)}) {
    CHECK(std::abs(j.tau(s) + s / (1.0 + 2.0 * s)) < 1e-14);
    CHECK(std::abs(j.c(s) - 1.0 / (1.0 + 2.0 * s)) < 1e-14);
  }

  const auto p = AutomorphismParams::dilation(2.0);
  const auto dil = unitary_from_automorphism(p, 0.7);
  const Complex c0 = unitary_c0(p, 0.7);
  CHECK(std::abs(std::abs(c0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  for (Complex s : {Complex(0.0), Complex(1.5, 0.5)}) {
    CHECK(std::abs(dil.tau(s) - (2.0 * s + 0.5)) < 1e-14);
    CHECK(std::abs(dil.c(s) - 2.0 * c0) < 1e-14);
  }
  AutomorphismParams bad{1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(unitary_from_automorphism(bad), DomainError);
}

TEST_CASE("unitary operators preserve inner products and compose") {
  oracle::Gen gen(42);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_params(gen);
    const auto q = random_params(gen);
    const auto tp = unitary_from_automorphism(p, gen.uniform(0.0, 6.0));
    const auto tq = unitary_from_automorphism(q);
    const auto tpq = unitary_from_automorphism(p * q);
    const auto both = tp.after(tq);
    const Exponent a(gen.power()), b(gen.power());
    for (const auto* op : {&tp, &tq, &tpq, &both}) {
      const auto fa = (*op)(a);
      const auto fb = (*op)(b);
      CHECK(in_half_plane(fa.exponent.value()));
      const Complex lhs = fa.constant * std::conj(fb.constant) * monomial_inner(fa.exponent, fb.exponent);
      CHECK(std::abs(lhs - monomial_inner(a, b)) < 1e-10 * std::max(1.0, std::abs(lhs)));
    }
    // tp o tq and tpq differ by one unimodular constant.
    const Complex ra = both(a).constant / tpq(a).constant;
    const Complex rb = both(b).constant / tpq(b).constant;
    CHECK(std::abs(std::abs(ra) - 1.0) < 1e-10);
    CHECK(std::abs(ra - rb) < 1e-10);
    CHECK(std::abs(both(a).exponent.value() - tpq(a).exponent.value()) < 1e-10);
  }
}

TEST_CASE("automorphisms map the half-plane to itself near its boundary") {
  oracle::Gen gen(43);
  for (int t = 0; t < 50; ++t) {
    const auto p = random_params(gen);
    for (double y = -20.0; y <= 20.0; y += 0.5) CHECK(p.tau(Complex(-0.5 + 1e-6, y)).real() > -0.5);
  }
}

TEST_CASE("phi(H) multipliers") {
  CHECK(std::abs(phi_of_H(Multiplier::identity(), Exponent(1.0)) - 0.5) < 1e-16);
  CHECK(phi_of_H(Multiplier::constant(1.0), Exponent(3.0, 1.0)) == Complex(1.0));
  const auto sq = Multiplier::polynomial({0.0, 0.0, 1.0});
  CHECK(std::abs(phi_of_H(sq, Exponent(1.0)) - 0.25) < 1e-16);
  const auto hh = apply_H(apply_H(mono_term(1.0)));
  CHECK(std::abs(hh.terms[0].coef - phi_of_H(sq, Exponent(1.0))) < 1e-16);

  // 1 / (3 - w) has its pole at w = 3, outside the closed disk.
  const auto r = Multiplier::rational({1.0}, {3.0, -1.0});
  CHECK(std::abs(phi_of_H(r, Exponent(0.0)) - 0.5) < 1e-15);
  CHECK_THROWS_AS(Multiplier::rational({1.0}, {1.5, -1.0}), DomainError);
  CHECK_THROWS_AS(Multiplier::rational({1.0}, {2.0, -1.0}), DomainError);

  const auto tab = Multiplier::table({0.5}, {7.0});
  CHECK(phi_of_H(tab, Exponent(1.0)) == Complex(7.0));
  CHECK_THROWS_AS(phi_of_H(tab, Exponent(2.0)), DomainError);
  const auto roots = polynomial_roots({6.0, -5.0, 1.0});
  CHECK(std::min(std::abs(roots[0] - 2.0), std::abs(roots[0] - 3.0)) < 1e-12);
}

TEST_CASE("Pick matrix positivity") {
  oracle::Gen gen(44);
  for (int t = 0; t < 30; ++t) {
    const MonomialSet grid = MonomialSet::simple(gen.distinct_powers(gen.integer(1, 8), 0.2));
    CHECK(pick_positivity_check(Multiplier::constant(0.0), 1.0, grid).positive);
    // ||H|| = 2 on L^2[0,1], so M = 2 passes on every grid.
    CHECK(pick_positivity_check(Multiplier::identity(), 2.0, grid).positive);
  }
  const MonomialSet g012 = MonomialSet::simple({0.0, 1.0, 2.0});
  const auto bad = pick_positivity_check(Multiplier::polynomial({0.0, 3.0}), 1.0, g012);
  CHECK_FALSE(bad.positive);
  CHECK(bad.min_eigenvalue < 0.0);
  // With M = 1 the identity fails as soon as the grid contains s = 0 and another point.
  CHECK_FALSE(pick_positivity_check(Multiplier::identity(), 1.0, MonomialSet::simple({0.0, 1.0})).positive);
  CHECK(pick_positivity_check(Multiplier::identity(), 1.0, MonomialSet::simple({1.0, 2.0, 5.0})).positive);
}
