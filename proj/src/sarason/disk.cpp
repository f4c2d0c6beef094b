#include "mono/sarason/disk.hpp"

#include <cmath>

namespace mono {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Complex monomial_image_value(const MonomialImage::Term& t, Complex z) {
  const int k = t.exponent.logpow();
  const Complex u = 1.0 - z;
  const Complex d = 1.0 + t.exponent.value() * u;
  return t.coef * ((k % 2 ? -1.0 : 1.0) * std::tgamma(k + 1.0)) * std::pow(u, k) /
         std::pow(d, k + 1);
}

// (1-z)^k (1 + s(1-z))^-(k+1) = (1+s)^-(k+1) (1-z)^k sum_n C(n+k, k) q^n z^n, q = s/(1+s).
void add_monomial_image_taylor(const MonomialImage::Term& t, std::vector<Complex>& out) {
  const int k = t.exponent.logpow();
  const Complex s = t.exponent.value();
  const Complex q = s / (1.0 + s);
  const std::size_t n = out.size();
  std::vector<Complex> g(n);
  if (n == 0) return;
  g[0] = (k % 2 ? -1.0 : 1.0) * std::tgamma(k + 1.0) / std::pow(1.0 + s, k + 1);
  for (std::size_t m = 1; m < n; ++m) g[m] = g[m - 1] * q * (double(m + k) / double(m));
  // Multiply by (1 - z)^k.
  for (int j = 1; j <= k; ++j)
    for (std::size_t m = n; m-- > 1;) g[m] -= g[m - 1];
  for (std::size_t m = 0; m < n; ++m) out[m] += t.coef * g[m];
}

}  // namespace

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("point must lie in the open unit disk");
}

Complex singular_inner(const Atom& atom, Complex z) {
  const Complex d = atom.tau - z;
  if (std::abs(d) < 1e-14) throw DomainError("singular inner function evaluated at its atom");
  return std::exp(-atom.w * (atom.tau + z) / d);
}

std::vector<Complex> singular_inner_taylor(const std::vector<Atom>& atoms, std::size_t n) {
  std::vector<Complex> phi(n);
  if (n == 0) return phi;
  // Exponent a(z) = sum_k -w_k (1 + 2 sum_{m>=1} conj(tau_k)^m z^m), since 1/tau = conj tau.
  std::vector<Complex> a(n);
  for (const auto& at : atoms) {
    a[0] -= at.w;
    Complex p = 1.0;
    const Complex tc = std::conj(at.tau);
    for (std::size_t m = 1; m < n; ++m) {
      p *= tc;
      a[m] -= 2.0 * at.w * p;
    }
  }
  // phi = exp(a): phi' = a' phi gives m phi_m = sum_{j=1}^m j a_j phi_{m-j}.
  phi[0] = std::exp(a[0]);
  for (std::size_t m = 1; m < n; ++m) {
    Complex s = 0.0;
    for (std::size_t j = 1; j <= m; ++j) s += double(j) * a[j] * phi[m - j];
    phi[m] = s / double(m);
  }
  return phi;
}

DiskFunction::DiskFunction(Repr repr) : repr_(std::move(repr)) {
  if (const auto* kc = std::get_if<KernelCombination>(&repr_))
    for (const auto& t : kc->terms)
      if (!(std::abs(t.alpha) < 1.0)) throw DomainError("kernel parameter must lie in the open disk");
  if (const auto* si = std::get_if<SingularInnerFactor>(&repr_))
    for (const auto& a : si->atoms)
      if (std::abs(std::abs(a.tau) - 1.0) > 1e-12 || !(a.w > 0.0))
        throw DomainError("singular inner atoms need |tau| = 1 and w > 0");
}

Complex DiskFunction::operator()(Complex z) const {
  if (!(std::abs(z) < 1.0)) throw DomainError("point must lie in the open unit disk");
  return std::visit(
      Overloaded{
          [&](const KernelCombination& kc) {
            Complex s = 0.0;
            for (const auto& t : kc.terms) s += t.coef * szego_kernel(t.alpha, z);
            return s;
          },
          [&](const MonomialImage& mi) {
            Complex s = 0.0;
            for (const auto& t : mi.terms) s += monomial_image_value(t, z);
            return s;
          },
          [&](const TaylorSeries& ts) {
            Complex s = 0.0;
            for (std::size_t m = ts.coeffs.size(); m-- > 0;) s = s * z + ts.coeffs[m];
            return s;
          },
          [&](const SingularInnerFactor& si) {
            Complex s = si.scale;
            for (const auto& a : si.atoms) s *= singular_inner(a, z);
            return s;
          },
      },
      repr_);
}

std::vector<Complex> DiskFunction::taylor(std::size_t n) const {
  return std::visit(
      Overloaded{
          [&](const KernelCombination& kc) {
            std::vector<Complex> out(n);
            for (const auto& t : kc.terms) {
              Complex p = t.coef;
              const Complex ac = std::conj(t.alpha);
              for (std::size_t m = 0; m < n; ++m, p *= ac) out[m] += p;
            }
            return out;
          },
          [&](const MonomialImage& mi) {
            std::vector<Complex> out(n);
            for (const auto& t : mi.terms) add_monomial_image_taylor(t, out);
            return out;
          },
          [&](const TaylorSeries& ts) {
            std::vector<Complex> out(n);
            for (std::size_t m = 0; m < std::min(n, ts.coeffs.size()); ++m) out[m] = ts.coeffs[m];
            return out;
          },
          [&](const SingularInnerFactor& si) {
            std::vector<Complex> out = singular_inner_taylor(si.atoms, n);
            for (auto& c : out) c *= si.scale;
            return out;
          },
      },
      repr_);
}

Complex h2_inner(const DiskFunction& f, const DiskFunction& g, std::size_t n) {
  const auto a = f.taylor(n);
  const auto b = g.taylor(n);
  Complex s = 0.0;
  for (std::size_t m = 0; m < n; ++m) s += a[m] * std::conj(b[m]);
  return s;
}

}  // namespace mono
