#include "mono/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "mono/atomic/model_space.hpp"
#include "mono/convergence/convergence.hpp"
#include "mono/core/inner_product.hpp"
#include "mono/operators/hardy_operators.hpp"
#include "mono/operators/unitary.hpp"
#include "mono/quadrature.hpp"
#include "mono/sarason/transform.hpp"

namespace mono::acceptance {
namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  Complex power() { return {uniform(-0.45, 3.0), uniform(-3.0, 3.0)}; }
  std::vector<Complex> powers(int n, double gap) {
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < n) {
      const Complex s = power();
      bool ok = true;
      for (const auto& t : out) ok = ok && std::abs(s - t) > gap;
      if (ok) out.push_back(s);
    }
    return out;
  }

 private:
  std::mt19937_64 g_;
};

std::vector<Complex> disk_points(int n, double r_max, std::uint64_t seed) {
  Rng g(seed);
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) z.push_back(std::polar(r_max * std::sqrt(g.uniform(0.0, 1.0)), g.uniform(-M_PI, M_PI)));
  return z;
}

Outcome sarason_isometry() {
  const std::size_t n = 512;
  std::vector<std::vector<Complex>> t;
  for (int k = 0; k <= 8; ++k) t.push_back(forward_monomial(Exponent(double(k))).taylor(n));
  double err = 0.0;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      Complex g = 0.0;
      for (std::size_t m = 0; m < n; ++m) g += t[j][m] * std::conj(t[i][m]);
      err = std::max(err, std::abs(g - 1.0 / (1.0 + i + j)));
    }
  return {err < 1e-9, "max Gram error " + sci(err)};
}

Outcome indicator_transform(std::uint64_t seed) {
  const auto z = disk_points(20, 0.9, seed);
  double err = 0.0;
  for (double s : {0.1, 0.5, 0.9}) {
    const auto f = FunctionSpec::indicator(0.0, s).sampled();
    const Atom atom{1.0, -0.5 * std::log(s)};
    for (Complex p : z) {
      const auto v = forward_quadrature(f, DiskPoint(p));
      err = std::max(err, std::abs(v.value - std::sqrt(s) * singular_inner(atom, p)));
    }
  }
  return {err < 1e-8, "max deviation " + sci(err)};
}

Outcome laguerre_basis() {
  // int_0^1 e_i e_j dx = int_0^inf L_i(t) L_j(t) e^-t dt.
  double gram_err = 0.0;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto r = quad::integrate_half_line([&](double t) {
        const double x = std::exp(-t);
        return Complex(eval_e(i, x) * eval_e(j, x) * x);
      });
      gram_err = std::max(gram_err, std::abs(r.value - (i == j ? 1.0 : 0.0)));
    }
  double j_err = 0.0;
  for (Complex s : {Complex(1.0), Complex(0.0, 1.0), Complex(0.3, 0.7)}) {
    const Exponent e(s);
    const std::size_t n = default_truncation(e);
    const auto flipped = apply_J_expansion(expand_monomial(e, n));
    const auto jm = apply_J_monomial(e);
    const auto direct = expand_monomial(jm.exponent, n);
    for (std::size_t k = 0; k <= n; ++k)
      j_err = std::max(j_err, std::abs(flipped.coeffs[k] - jm.constant * direct.coeffs[k]));
  }
  return {gram_err < 1e-8 && j_err < 1e-10,
          "Gram deviation " + sci(gram_err) + ", J route deviation " + sci(j_err)};
}

Outcome interval_example() {
  const auto seq = SubspaceSequence::interval(0.25);
  const auto curve = distance_curve(FunctionSpec::monomial(Exponent(0.0)), seq, 1000);
  double err = 0.0;
  for (const auto& p : curve) {
    if (!p.distance) return {false, "gap at n = " + std::to_string(p.n)};
    const double n = double(p.n);
    err = std::max(err, std::abs(*p.distance - (n + 1.0) / (2.0 * n + 1.0)));
  }
  const double at100 = std::abs(*curve[99].distance - 0.5);
  double gram_err = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto r = distance_to_span(ClosedFormTarget::monomial(Exponent(0.0)), seq(n));
    gram_err = std::max(gram_err, std::abs(r.distance - *curve[n - 1].distance));
  }
  return {err < 1e-12 && at100 < 3e-3 && gram_err < 1e-8,
          "max deviation " + sci(err) + ", |d(100) - 1/2| = " + sci(at100) + ", Gram check " + sci(gram_err)};
}

Outcome muntz_consistency() {
  const auto half = FunctionSpec::monomial(Exponent(0.5));
  // Sequences are indexed from s_0, so S_n holds n + 1 exponents and curve[i] is dist(f, M(S_i)).
  const auto dense = muntz_limit_experiment(SequenceSpec::affine(1.0, -1.0), half, 200);
  std::size_t first_below = 0;
  for (const auto& p : dense.curve)
    if (p.distance && *p.distance < 1e-2) {
      first_below = p.n - 1;
      break;
    }
  const auto sparse = muntz_limit_experiment(SequenceSpec::geometric(0.5, 2.0), half, 60);
  double diff = 0.0;
  for (std::size_t i = 30; i < sparse.curve.size(); ++i)
    diff = std::max(diff, std::abs(*sparse.curve[i].distance - *sparse.curve[i - 1].distance));
  const double limit = *sparse.curve.back().distance;
  const bool ok = dense.density.density == Density::Dense && first_below > 0 &&
                  sparse.density.density == Density::NotDense && diff < 1e-10 && limit > 0.0;
  return {ok, std::string("s_k = k: ") + to_string(dense.density.density) + ", below 1e-2 at n = " +
                  std::to_string(first_below) + "; s_k = 2^k: " + to_string(sparse.density.density) +
                  ", limit " + sci(limit) + ", max difference for n >= 30 " + sci(diff)};
}

Outcome atomic_norms() {
  Rng g(7);
  double formula_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Exponent s(g.power());
    const double w = g.uniform(0.01, 3.0);
    const double a = 1.0 + 2.0 * s.re();
    const double ref = (1.0 / a) * (1.0 - std::exp(-2.0 * w * a));
    formula_err = std::max(formula_err, std::abs(proj_norm_sq(AtomicSpaceParams(1.0, w), s) - ref) / ref);
  }
  double dist_err = 0.0, sens = 0.0;
  for (double w : {0.25, 0.5, 1.0}) {
    const auto r = model_space_distance(expand_monomial(Exponent(0.0), 4096), AtomicMeasure({{1.0, w}}), 4096);
    const double expect = std::sqrt(1.0 - proj_norm_sq(AtomicSpaceParams(1.0, w), Exponent(0.0)));
    dist_err = std::max(dist_err, std::abs(r.distance - expect) / expect);
    sens = std::max(sens, r.sensitivity);
  }
  return {formula_err < 1e-14 && dist_err < 0.01 && sens < 0.01,
          "closed form relative error " + sci(formula_err) + ", Toeplitz oracle relative error " + sci(dist_err) +
              ", N/2 sensitivity " + sci(sens)};
}

Outcome conjugation(std::uint64_t seed) {
  const auto z = disk_points(50, 0.9, seed);
  double dev = 0.0, unit = 0.0;
  for (double c : {0.5, 1.0, 2.0}) {
    const auto r = conjugation_identity_check(c, 1.0, z);
    dev = std::max(dev, r.max_deviation);
    unit = std::max(unit, r.unimodularity_error);
  }
  return {dev < 1e-10 && unit < 1e-10, "max deviation " + sci(dev) + ", | |lambda| - 1 | " + sci(unit)};
}

Outcome operator_routes() {
  const std::size_t n = 256;
  double err = 0.0;
  for (HardyOp op : {HardyOp::H, HardyOp::X, HardyOp::V}) {
    const Eigen::MatrixXcd m = hat_matrix(op, n).cast<Complex>();
    for (Complex s : {Complex(0.0), Complex(1.0), Complex(0.0, 1.0)}) {
      const auto in = expand_monomial(Exponent(s), n - 1);
      const auto direct = apply(op, MonomialCombination{{{1.0, Exponent(s)}}}).expand(n - 1);
      Eigen::VectorXcd v(n);
      for (std::size_t k = 0; k < n; ++k) v(k) = in.coeffs[k];
      const Eigen::VectorXcd w = m * v;
      for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(w(k) - direct.coeffs[k]));
    }
  }
  return {err < 1e-8, "max deviation " + sci(err)};
}

Outcome bessel() {
  const std::vector<Complex> d(200, 1.0);
  double err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double x = 0.05 + 0.95 * (k + 1) / 20.0;
    const auto v = inverse_analytic(d, x);
    err = std::max(err, std::abs(v.value - std::cyl_bessel_j(0.0, 2.0 * std::sqrt(-std::log(x)))));
  }
  return {err < 1e-9, "max deviation " + sci(err)};
}

Outcome properties(std::uint64_t seed) {
  Rng g(seed);
  int failures = 0, runs = 0;
  auto check = [&](bool ok) {
    ++runs;
    if (!ok) ++failures;
  };
  for (int t = 0; t < 200; ++t) {
    const auto p = g.powers(g.integer(1, 8), 0.05);
    const auto set = MonomialSet::simple(p);
    const CMatrix gm = gram_matrix<Complex>(set);
    check((gm - gm.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    check(gram_is_positive_definite(set));

    const Exponent target(g.power());
    const double closed = monomial_distance_closed_form(target, set);
    const auto gram = distance_to_span(ClosedFormTarget::monomial(target), set);
    check(std::abs(closed - gram.distance) < 1e-8);

    const auto f = ClosedFormTarget::truncated_monomial(g.uniform(0.0, 0.8), target);
    const auto bigger = set.with(g.powers(1, 0.0)[0]);
    bool fresh = true;
    for (const auto& e : set) fresh = fresh && std::abs(e.value() - bigger.entries().back().value()) > 0.05;
    if (fresh) {
      const double d0 = distance_to_span(f, set).distance;
      const double d1 = distance_to_span(f, bigger).distance;
      check(d1 <= d0 * (1.0 + 1e-9) + 1e-12);
    }

    const auto j1 = apply_J_monomial(target);
    const auto j2 = apply_J_monomial(j1.exponent);
    check(std::abs(j2.exponent.value() - target.value()) < 1e-12 * std::max(1.0, std::abs(target.value())) &&
          std::abs(j1.constant * j2.constant - 1.0) < 1e-12);

    AutomorphismParams a;
    a.a = g.uniform(0.3, 2.0);
    a.b = g.uniform(-1.5, 1.5);
    a.c = g.uniform(0.0, 1.5);
    a.d = (1.0 + a.b * a.c) / a.a;
    const auto u = unitary_from_automorphism(a, g.uniform(0.0, 6.0));
    const Exponent x(g.power()), y(g.power());
    const auto ux = u(x), uy = u(y);
    const Complex lhs = ux.constant * std::conj(uy.constant) * monomial_inner(ux.exponent, uy.exponent);
    check(std::abs(lhs - monomial_inner(x, y)) < 1e-10 * std::max(1.0, std::abs(lhs)));
  }
  return {failures == 0, std::to_string(failures) + " failures in " + std::to_string(runs) + " checks"};
}

CriterionResult run(int id, std::string name, double limit, const std::function<Outcome()>& f) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.time_limit = limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto o = f();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("threw: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0.0 && r.seconds > limit) {
    r.passed = false;
    r.detail += ", time limit exceeded";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_primary_suite(const SuiteOptions& opt) {
  std::vector<CriterionResult> out;
  out.push_back(run(1, "Sarason transform isometry", 5.0, sarason_isometry));
  out.push_back(run(2, "indicator transform", 10.0, [&] { return indicator_transform(opt.seed); }));
  out.push_back(run(3, "Laguerre orthonormality and J", 0.0, laguerre_basis));
  out.push_back(run(4, "non-monotone interval example", 1.0, interval_example));
  out.push_back(run(5, "Muntz verdict consistency", 0.0, muntz_consistency));
  out.push_back(run(6, "atomic projection norms", 60.0, atomic_norms));
  out.push_back(run(7, "conjugation identity", 0.0, [&] { return conjugation(opt.seed); }));
  out.push_back(run(8, "operator route equivalence", 0.0, operator_routes));
  out.push_back(run(9, "Bessel identity", 0.0, bessel));
  out.push_back(run(10, "property suites", 0.0, [&] { return properties(opt.seed); }));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " (";
  s.precision(3);
  s << std::fixed << r.seconds << " s";
  if (r.time_limit > 0.0) s << ", limit " << r.time_limit << " s";
  s << ")";
  return s.str();
}

}  // namespace mono::acceptance
