#include "mono/atomic/atomic.hpp"

#include <algorithm>
#include <cmath>

#include "mono/laguerre/laguerre.hpp"

namespace mono {
namespace {

constexpr double kUnitTol = 1e-12;

void check_unimodular(Complex tau) {
  if (!std::isfinite(std::abs(tau)) || std::abs(std::abs(tau) - 1.0) > kUnitTol)
    throw DomainError("atom must lie on the unit circle");
}

void check_simple(const Exponent& s) {
  if (s.logpow() != 0) throw DomainError("projection norms are defined for simple exponents only");
}

// (1 - e^(-2 w a)) / a with a = 1 + 2 Re s, stable for small w a.
double truncated_norm(double w, double a) { return -std::expm1(-2.0 * w * a) / a; }

}  // namespace

AtomicSpaceParams::AtomicSpaceParams(Complex tau, double w) : tau_(tau), w_(w), wp_(w) {
  check_unimodular(tau);
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("atom weight must be positive");
  if (std::abs(tau - 1.0) <= kUnitTol) {
    tau_ = 1.0;
    return;
  }
  const Complex c = (tau + 1.0) / (Complex(0.0, 2.0) * (tau - 1.0));
  // A rounding error e in |tau| shows up as e |c|^2 in Im c.
  const double scale = std::max(1.0, std::abs(c));
  if (std::abs(c.imag()) > kUnitTol * scale * scale)
    throw DomainError("c = (tau+1)/(2i(tau-1)) is not real");
  c_ = c.real();
  wp_ = (1.0 + 4.0 * c.real() * c.real()) * w;
}

AtomicSpaceParams AtomicSpaceParams::from_c(double c, double wp) {
  if (!std::isfinite(c)) throw DomainError("c must be finite");
  if (!(wp > 0.0)) throw DomainError("wp must be positive");
  const Complex ic(0.0, c);
  AtomicSpaceParams p((2.0 * ic + 1.0) / (2.0 * ic - 1.0), wp / (1.0 + 4.0 * c * c));
  if (!p.at_one()) {
    p.c_ = c;
    p.wp_ = wp;
  }
  return p;
}

double AtomicSpaceParams::c() const {
  if (!c_) throw DomainError("c is undefined for tau = 1");
  return *c_;
}

double proj_norm_sq(const AtomicSpaceParams& p, const Exponent& s) {
  check_simple(s);
  const double a = 1.0 + 2.0 * s.re();
  if (p.at_one()) return truncated_norm(p.w(), a);
  const double d = p.c() - s.im();
  return truncated_norm(p.wp() / (a * a + 4.0 * d * d), a);
}

double proj_norm_sq_via_J(const AtomicSpaceParams& p, const Exponent& s) {
  check_simple(s);
  const Exponent t(s.value() - Complex(0.0, p.c()));
  const auto jt = apply_J_monomial(t);
  return std::norm(jt.constant) * truncated_norm(p.wp(), 1.0 + 2.0 * jt.exponent.re());
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    check_unimodular(atoms_[i].tau);
    if (!(atoms_[i].w > 0.0) || !std::isfinite(atoms_[i].w)) throw DomainError("atom weight must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(atoms_[i].tau - atoms_[j].tau) < kUnitTol) throw DomainError("atoms must be distinct");
  }
}

double AtomicMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.w;
  return m;
}

Complex AtomicMeasure::moment(int j) const {
  Complex m = 0.0;
  for (const auto& a : atoms_) m += a.w * std::pow(std::conj(a.tau), j);
  return m;
}

Complex InnerFunction::operator()(Complex z) const {
  if (!(std::abs(z) < 1.0)) throw DomainError("inner function is evaluated inside the disk only");
  Complex e = 0.0;
  for (const auto& a : mu_.atoms()) {
    if (std::abs(z - a.tau) < 1e-14) throw DomainError("evaluation point coincides with an atom");
    e -= a.w * (a.tau + z) / (a.tau - z);
  }
  return std::exp(e);
}

Complex inner_eval(const InnerFunction& s, DiskPoint z) { return s(z.z()); }

Complex conjugation_psi(double c, Complex z) {
  const Complex ic(0.0, c);
  return ((1.0 - ic) * z + ic) / (1.0 + ic - ic * z);
}

ConjugationCheck conjugation_identity_check(double c, double wp, const std::vector<Complex>& z_grid) {
  if (!(wp > 0.0)) throw DomainError("wp must be positive");
  if (z_grid.empty()) throw DomainError("grid must not be empty");
  const auto p = AtomicSpaceParams::from_c(c, wp);
  const Atom left{-1.0, wp};
  const Atom right{p.tau(), p.w()};
  ConjugationCheck out;
  out.tau = p.tau();
  out.w = p.w();
  std::vector<Complex> lhs, rhs;
  for (Complex z : z_grid) {
    (void)DiskPoint(z);
    const Complex pz = conjugation_psi(c, z);
    if (!(std::abs(pz) < 1.0)) throw DomainError("psi maps a grid point outside the disk");
    lhs.push_back(singular_inner(left, pz));
    rhs.push_back(singular_inner(right, z));
  }
  out.constant = lhs[0] / rhs[0];
  for (std::size_t k = 0; k < lhs.size(); ++k)
    out.max_deviation = std::max(out.max_deviation, std::abs(lhs[k] - out.constant * rhs[k]));
  out.unimodularity_error = std::abs(std::abs(out.constant) - 1.0);
  out.constant_formula_error = std::abs(out.constant - std::exp(Complex(0.0, 2.0 * c * p.w())));
  out.atom_map_error = std::abs(conjugation_psi(c, p.tau()) + 1.0);
  return out;
}

}  // namespace mono
