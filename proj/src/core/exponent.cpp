#include "mono/core/exponent.hpp"
#include "mono/core/scaled_monomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace mono {

Exponent::Exponent(double re, double im, int logpow) : re_(re), im_(im), logpow_(logpow) {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw DomainError("exponent must be finite");
  if (!(re > -0.5)) {
    std::ostringstream msg;
    msg << "exponent " << re << (im < 0 ? "-" : "+") << std::abs(im)
        << "i is outside the half-plane Re s > -1/2";
    throw DomainError(msg.str());
  }
  if (logpow < 0) throw DomainError("log power must be nonnegative");
}

double Exponent::norm_sq() const {
  const int k2 = 2 * logpow_;
  return std::tgamma(k2 + 1.0) / std::pow(1.0 + 2.0 * re_, k2 + 1);
}

MonomialSet::MonomialSet(std::vector<Exponent> entries) : entries_(std::move(entries)) {
  std::vector<std::tuple<double, double, int>> keys;
  keys.reserve(entries_.size());
  for (const auto& e : entries_) keys.emplace_back(e.re(), e.im(), e.logpow());
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto [re, im, k] = keys[i];
    const bool same_power =
        i > 0 && std::get<0>(keys[i - 1]) == re && std::get<1>(keys[i - 1]) == im;
    if (same_power && std::get<2>(keys[i - 1]) == k)
      throw DomainError("monomial set has a duplicate entry");
    // Sorted log powers of one exponent must read 0, 1, ..., m-1.
    const int expected = same_power ? std::get<2>(keys[i - 1]) + 1 : 0;
    if (k != expected)
      throw DomainError("monomial set: log powers of a repeated exponent must be 0,1,...,m-1");
  }
}

MonomialSet MonomialSet::simple(std::span<const Complex> powers) {
  std::vector<Exponent> entries;
  entries.reserve(powers.size());
  for (Complex s : powers) entries.emplace_back(s);
  return MonomialSet(std::move(entries));
}

MonomialSet MonomialSet::simple(std::initializer_list<Complex> powers) {
  return simple(std::span<const Complex>(powers.begin(), powers.size()));
}

MonomialSet MonomialSet::with(Complex s) const {
  int k = 0;
  for (const auto& e : entries_)
    if (e.value() == s) k = std::max(k, e.logpow() + 1);
  std::vector<Exponent> next = entries_;
  next.emplace_back(s, k);
  return MonomialSet(std::move(next));
}

bool MonomialSet::all_simple() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Exponent& e) { return e.logpow() == 0; });
}

Complex ScaledMonomial::operator()(double x) const {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("evaluation point must lie in (0, 1]");
  const double l = std::log(x);
  return constant * std::exp(exponent.value() * l) * std::pow(l, exponent.logpow());
}

}  // namespace mono
