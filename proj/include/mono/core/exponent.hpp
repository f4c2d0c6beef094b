#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mono/common.hpp"

namespace mono {

/// Power s of a monomial x^s (ln x)^k with Re s > -1/2, so that it lies in L^2[0,1].
class Exponent {
 public:
  /// Throws DomainError unless re > -1/2 and logpow >= 0.
  Exponent(double re, double im = 0.0, int logpow = 0);
  explicit Exponent(Complex s, int logpow = 0) : Exponent(s.real(), s.imag(), logpow) {}

  Complex value() const { return {re_, im_}; }
  double re() const { return re_; }
  double im() const { return im_; }
  int logpow() const { return logpow_; }

  /// ||x^s (ln x)^k||^2 = (2k)! / (1 + 2 Re s)^(2k+1).
  double norm_sq() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  double re_;
  double im_;
  int logpow_;
};

/// True when s lies in the half-plane Re s > -1/2.
inline bool in_half_plane(Complex s) { return s.real() > -0.5; }

/// Finite multiset of exponents spanning the monomial space M(S).
///
/// A repeated power s appears as the entries (s,0), (s,1), ..., (s,m-1); the basis
/// order is the order given by the caller.
class MonomialSet {
 public:
  MonomialSet() = default;
  /// Throws DomainError on duplicate (re, im, logpow) triples or on a gap in the
  /// log-power ladder of a repeated exponent.
  explicit MonomialSet(std::vector<Exponent> entries);

  /// Simple (logpow 0) set from a list of distinct powers.
  static MonomialSet simple(std::span<const Complex> powers);
  static MonomialSet simple(std::initializer_list<Complex> powers);

  /// Appends s with the next free log power (the "multiplicity" convention).
  MonomialSet with(Complex s) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Exponent& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Exponent>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// True when every entry has logpow 0 (then the Gram matrix is a Cauchy matrix).
  bool all_simple() const;

 private:
  std::vector<Exponent> entries_;
};

}  // namespace mono
