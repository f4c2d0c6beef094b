#pragma once

// Multiprecision scalars for ill-conditioned Cauchy-structured solves.
// Kept out of common.hpp: Boost.Multiprecision is heavy to compile.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace mono {

/// 100 significant decimal digits, roughly 6x double.
using ExtReal = boost::multiprecision::cpp_bin_float_100;
using ExtComplex = boost::multiprecision::cpp_complex_100;

/// 250 digits, used when the 100-digit condition estimate is too large.
using WideReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<250>,
                                               boost::multiprecision::et_off>;
using WideComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<250>>,
    boost::multiprecision::et_off>;

}  // namespace mono
