#include <doctest.h>

#include "mono/core/distance.hpp"
#include "oracles.hpp"

using namespace mono;

namespace {

MonomialSet range_set(int lo, int hi) {
  std::vector<Complex> p;
  for (int k = lo; k <= hi; ++k) p.push_back(double(k));
  return MonomialSet::simple(p);
}

double exact_distance(int t, const std::vector<int>& s) {
  return std::sqrt(static_cast<double>(oracle::integer_distance_sq(t, s)));
}

}  // namespace

TEST_CASE("distance examples") {
  const auto x = ClosedFormTarget::monomial(Exponent(1.0));
  CHECK(distance_to_span(x, MonomialSet::simple({0.0})).distance ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-14));

  const auto one = ClosedFormTarget::monomial(Exponent(0.0));
  CHECK(distance_to_span(one, MonomialSet::simple({0.0})).distance < 1e-8);

  const auto x2 = ClosedFormTarget::monomial(Exponent(2.0));
  const double d = distance_to_span(x2, MonomialSet::simple({0.0, 1.0})).distance;
  CHECK(d == doctest::Approx(exact_distance(2, {0, 1})).epsilon(1e-12));
  CHECK(d == doctest::Approx(1.0 / (6.0 * std::sqrt(5.0))).epsilon(1e-12));
}

TEST_CASE("pairing-oracle interface agrees with the closed-form target") {
  const auto f = ClosedFormTarget::monomial(Exponent(0.3, 1.2));
  const MonomialSet set = MonomialSet::simple({0.0, 1.0, Complex(0.5, -1.0)});
  const auto a = distance_to_span(f, set);
  const auto b = distance_to_span([&](const Exponent& m) { return f.pairing<Complex>(m); },
                                  f.norm_sq<Complex>().real(), set);
  CHECK(a.distance == doctest::Approx(b.distance).epsilon(1e-10));
  REQUIRE(a.coefficients.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(a.coefficients[i] - b.coefficients[i]) < 1e-8);
}

TEST_CASE("best coefficients reproduce the projection") {
  // f = 2 + 3x lies in M({0, 1}); the coefficients are recovered exactly.
  const ClosedFormTarget f({TargetTerm{2.0, Exponent(0.0)}, TargetTerm{3.0, Exponent(1.0)}});
  const auto r = distance_to_span(f, MonomialSet::simple({0.0, 1.0}));
  CHECK(r.distance < 1e-7);
  CHECK(std::abs(r.coefficients[0] - 2.0) < 1e-10);
  CHECK(std::abs(r.coefficients[1] - 3.0) < 1e-10);
}

TEST_CASE("closed-form product examples") {
  CHECK(monomial_distance_closed_form(Exponent(1.0), MonomialSet::simple({0.0})) ==
        doctest::Approx(0.2886751345948129).epsilon(1e-14));
  CHECK(monomial_distance_closed_form(Exponent(2.0), MonomialSet::simple({0.0, 2.0})) == 0.0);
  for (int n = 1; n <= 8; ++n) {
    const MonomialSet s = range_set(n + 1, 2 * n);
    const double expected = (n + 1.0) / (2.0 * n + 1.0);
    CHECK(monomial_distance_closed_form(Exponent(0.0), s) == doctest::Approx(expected).epsilon(1e-14));
    std::vector<int> ints;
    for (int k = n + 1; k <= 2 * n; ++k) ints.push_back(k);
    CHECK(exact_distance(0, ints) == doctest::Approx(expected).epsilon(1e-14));
    const auto g = distance_to_span(ClosedFormTarget::monomial(Exponent(0.0)), s);
    CHECK(std::abs(g.distance - expected) < 1e-8);
  }
  CHECK_THROWS_AS(monomial_distance_closed_form(Exponent(0.0, 0.0, 1), MonomialSet::simple({1.0})),
                  DomainError);
}

TEST_CASE("closed form and Gram solve agree on random instances") {
  oracle::Gen gen(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const auto powers = gen.distinct_powers(gen.integer(1, 8));
    const MonomialSet set = MonomialSet::simple(powers);
    const Exponent t(gen.power());
    const double closed = monomial_distance_closed_form(t, set);
    const double gram = distance_to_span(ClosedFormTarget::monomial(t), set).distance;
    CHECK(std::abs(closed - gram) <= 1e-8 * (1.0 + closed));
  }
}

TEST_CASE("distance is monotone under adding exponents") {
  oracle::Gen gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto powers = gen.distinct_powers(gen.integer(2, 8));
    const std::vector<Complex> smaller(powers.begin(), powers.end() - 1);
    const ClosedFormTarget f({TargetTerm{1.0, Exponent(gen.power())},
                              TargetTerm{Complex(0.5, -1.0), Exponent(gen.power())}});
    const double d_small = distance_to_span(f, MonomialSet::simple(smaller)).distance;
    const double d_big = distance_to_span(f, MonomialSet::simple(powers)).distance;
    CHECK(d_big <= d_small + 1e-9);
  }
}

TEST_CASE("log-monomial targets and multiplicities") {
  // (ln x) is orthogonal-projected onto span{1}: <ln x, 1> = -1, ||ln x||^2 = 2, distance 1.
  const auto f = ClosedFormTarget::monomial(Exponent(0.0, 0.0, 1));
  CHECK(distance_to_span(f, MonomialSet::simple({0.0})).distance == doctest::Approx(1.0));
  // x^1 ln x lies in the span of the doubled exponent 1.
  const auto g = ClosedFormTarget::monomial(Exponent(1.0, 0.0, 1));
  CHECK(distance_to_span(g, MonomialSet::simple({1.0}).with(1.0)).distance < 1e-7);
}

TEST_CASE("truncated targets: Pythagoras and quadrature check") {
  const auto f = ClosedFormTarget::truncated_monomial(0.5, Exponent(0.0));
  CHECK(f.norm_sq<Complex>().real() == doctest::Approx(0.5));
  const Exponent m(1.0, 2.0);
  const Complex q = oracle::integrate(
      [&](double x) { return std::pow(x, std::conj(m.value())); }, 0.5, 1.0);
  CHECK(std::abs(f.pairing<Complex>(m) - q) < 1e-12);

  const MonomialSet set = MonomialSet::simple({0.0, 1.0, 2.0});
  const auto r = distance_to_span(f, set);
  // ||P f||^2 = Re sum conj(a_i) <f, m_i> ... recomputed from the coefficients.
  Complex pf_sq = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j)
      pf_sq += r.coefficients[i] * std::conj(r.coefficients[j]) /
               (1.0 + set[i].value() + std::conj(set[j].value()));
  CHECK(r.distance * r.distance + pf_sq.real() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("ill-conditioned solves switch to extended precision") {
  const auto chi = ClosedFormTarget::truncated_monomial(0.5, Exponent(0.0));
  const auto r8 = distance_to_span(chi, range_set(9, 16));
  CHECK(r8.digits == 100);
  CHECK(r8.ill_conditioned);
  const auto r20 = distance_to_span(chi, range_set(21, 40));
  CHECK(r20.digits >= 100);
  CHECK(r20.distance > 0.0);
  CHECK(r20.distance < r8.distance);

  DistanceOptions ext;
  ext.gram.precision = Precision::Extended;
  const auto low = distance_to_span(chi, range_set(2, 4));
  const auto high = distance_to_span(chi, range_set(2, 4), ext);
  CHECK(low.digits == 16);
  CHECK(high.digits == 100);
  CHECK(low.distance == doctest::Approx(high.distance).epsilon(1e-9));
}

TEST_CASE("distance_auto chooses the closed form for monomials") {
  const auto r = distance_auto(ClosedFormTarget::monomial(Exponent(0.0), 2.0), range_set(2, 3));
  CHECK(r.method == "closed-form");
  CHECK(r.distance == doctest::Approx(2.0 * (2.0 / 3.0) * (3.0 / 4.0)).epsilon(1e-12));
}
