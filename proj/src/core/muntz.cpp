#include "mono/core/muntz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mono {
namespace {

bool is_integer(double x) { return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x)); }

void check_hypotheses(const std::vector<Complex>& s, Criterion criterion) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!in_half_plane(s[k]) || !std::isfinite(s[k].real()) || !std::isfinite(s[k].imag()))
      throw DomainError("sequence term " + std::to_string(k + 1) + " lies outside Re s > -1/2");
  }
  std::vector<Complex> sorted = s;
  std::sort(sorted.begin(), sorted.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("sequence terms must be distinct");

  if (criterion == Criterion::Classical) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k].imag() != 0.0 || s[k].real() < 0.0 || !is_integer(s[k].real()))
        throw WrongCriterionError("classical criterion needs nonnegative integer exponents (term " +
                                  std::to_string(k + 1) + ")");
      if (k > 0 && !(s[k].real() > s[k - 1].real()))
        throw WrongCriterionError("classical criterion needs a strictly increasing sequence");
    }
  } else if (criterion == Criterion::RealSzasz) {
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k].imag() != 0.0)
        throw WrongCriterionError("real Szasz criterion applied to a complex exponent (term " +
                                  std::to_string(k + 1) + ")");
  }
}

struct Pattern {
  Density density = Density::Undetermined;
  const char* certificate = "none";
};

// Comparison certificates for the generated kinds. Each branch states the asymptotic
// size of the terms, which is the same for all three criteria up to constants.
Pattern match_pattern(const SequenceSpec& seq) {
  using Kind = SequenceSpec::Kind;
  switch (seq.kind) {
    case Kind::Affine:
      // Re a > 0: terms ~ 2 Re a / (|a|^2 k). Re a = 0: terms ~ (2 Re b + 1) / (|a|^2 k^2).
      if (seq.a.real() > 0.0) return {Density::Dense, "harmonic"};
      return {Density::NotDense, "p-series"};
    case Kind::Power:
      if (seq.a.real() > 0.0)
        return seq.p <= 1.0 ? Pattern{Density::Dense, "harmonic"}
                            : Pattern{Density::NotDense, "p-series"};
      return 2.0 * seq.p <= 1.0 ? Pattern{Density::Dense, "harmonic"}
                                : Pattern{Density::NotDense, "p-series"};
    case Kind::Geometric: {
      const double mod = std::abs(seq.r);
      if (mod > 1.0) return {Density::NotDense, "geometric"};
      // Exponents accumulate at 0, where every term is close to its value at s = 0.
      if (mod < 1.0) return {Density::Dense, "bounded-below"};
      return {};
    }
    case Kind::Explicit:
      return {};
  }
  return {};
}

void check_parameters(const SequenceSpec& seq) {
  using Kind = SequenceSpec::Kind;
  switch (seq.kind) {
    case Kind::Affine:
      if (seq.a == 0.0) throw DomainError("affine sequence with a = 0 repeats its terms");
      if (seq.a.real() < 0.0) throw DomainError("affine sequence with Re a < 0 leaves the half-plane");
      break;
    case Kind::Power:
      if (!(seq.p > 0.0) || seq.a == 0.0)
        throw DomainError("power sequence needs a != 0 and p > 0");
      if (seq.a.real() < 0.0) throw DomainError("power sequence with Re a < 0 leaves the half-plane");
      break;
    case Kind::Geometric:
      if (seq.a == 0.0 || seq.r == 0.0) throw DomainError("geometric sequence needs a, r != 0");
      break;
    case Kind::Explicit:
      break;
  }
}

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Classical: return "classical";
    case Criterion::RealSzasz: return "real-szasz";
    case Criterion::ComplexSzasz: return "complex-szasz";
  }
  return "?";
}

const char* to_string(Density d) {
  switch (d) {
    case Density::Dense: return "dense";
    case Density::NotDense: return "not-dense";
    case Density::Undetermined: return "undetermined";
  }
  return "?";
}

Criterion criterion_from_string(const std::string& name) {
  if (name == "classical") return Criterion::Classical;
  if (name == "real-szasz" || name == "real") return Criterion::RealSzasz;
  if (name == "complex-szasz" || name == "complex") return Criterion::ComplexSzasz;
  throw DomainError("unknown criterion '" + name + "'");
}

SequenceSpec SequenceSpec::affine(Complex a, Complex b) {
  SequenceSpec s;
  s.kind = Kind::Affine;
  s.a = a;
  s.b = b;
  return s;
}

SequenceSpec SequenceSpec::geometric(Complex a, Complex r) {
  SequenceSpec s;
  s.kind = Kind::Geometric;
  s.a = a;
  s.r = r;
  return s;
}

SequenceSpec SequenceSpec::power(Complex a, double p, Complex b) {
  SequenceSpec s;
  s.kind = Kind::Power;
  s.a = a;
  s.p = p;
  s.b = b;
  return s;
}

SequenceSpec SequenceSpec::explicit_list(std::vector<Complex> values) {
  SequenceSpec s;
  s.kind = Kind::Explicit;
  s.values = std::move(values);
  return s;
}

std::size_t SequenceSpec::available() const {
  return kind == Kind::Explicit ? values.size() : std::numeric_limits<std::size_t>::max();
}

Complex SequenceSpec::term(std::size_t k) const {
  if (k == 0) throw DomainError("sequence indices start at 1");
  const double kd = static_cast<double>(k);
  switch (kind) {
    case Kind::Affine: return a * kd + b;
    case Kind::Geometric:
      if (a.imag() == 0.0 && r.imag() == 0.0) return a.real() * std::pow(r.real(), kd);
      return a * std::pow(r, kd);
    case Kind::Power: return a * std::pow(kd, p) + b;
    case Kind::Explicit:
      if (k > values.size()) throw DomainError("explicit sequence has only " +
                                               std::to_string(values.size()) + " terms");
      return values[k - 1];
  }
  return {};
}

MonomialSet SequenceSpec::first(std::size_t n) const {
  std::vector<Complex> powers;
  powers.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(term(k));
  return MonomialSet::simple(powers);
}

double muntz_term(Criterion criterion, Complex s) {
  switch (criterion) {
    case Criterion::Classical:
      return s.real() == 0.0 ? 0.0 : 1.0 / s.real();
    case Criterion::RealSzasz: {
      const double u = 2.0 * s.real() + 1.0;
      return u / (u * u + 1.0);
    }
    case Criterion::ComplexSzasz:
      return (2.0 * s.real() + 1.0) / std::norm(s + 1.0);
  }
  return 0.0;
}

DensityVerdict muntz_verdict(const SequenceSpec& seq, Criterion criterion,
                             const VerdictOptions& opt) {
  check_parameters(seq);
  const std::size_t n = std::min(opt.n_terms, seq.available());
  if (n == 0) throw DomainError("muntz_verdict: empty sequence");
  std::vector<Complex> s(n);
  for (std::size_t k = 1; k <= n; ++k) s[k - 1] = seq.term(k);
  check_hypotheses(s, criterion);

  DensityVerdict out;
  out.criterion = criterion;
  out.partial_sums.reserve(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum += muntz_term(criterion, s[k]);
    out.partial_sums.push_back(sum);
  }
  const std::size_t w = std::min(opt.tail_window, n);
  out.tail_increment = sum - (w == n ? 0.0 : out.partial_sums[n - w - 1]);

  const Pattern pattern = match_pattern(seq);
  if (pattern.density != Density::Undetermined) {
    out.density = pattern.density;
    out.certificate = pattern.certificate;
  } else if (sum > opt.divergence_bound) {
    out.density = Density::Dense;
    out.certificate = "partial-sum-bound";
  } else {
    out.density = Density::Undetermined;
    out.certificate = "none";
  }
  return out;
}

}  // namespace mono
