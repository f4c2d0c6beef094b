#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "mono/atomic/model_space.hpp"
#include "mono/convergence/convergence.hpp"
#include "mono/operators/hardy_operators.hpp"
#include "mono/operators/multiplier.hpp"

namespace mono::io {

using json = nlohmann::json;

/// Malformed input document (exit code 2 in the CLI).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON text, or the contents of a file when the argument starts with '@'.
json parse(const std::string& text);

/// Complex numbers are written as [re, im]; a bare number, [re, im], {"re","im"} and
/// the string "re,im" are all accepted.
Complex complex_from(const json& j);
json to_json(Complex z);
/// "re,im", "re" or JSON text.
Complex parse_complex(const std::string& text);

/// {"re": ..., "im": ..., "logpow": ...}, or anything complex_from accepts.
Exponent exponent_from(const json& j);
json to_json(const Exponent& e);

/// {"exponents": [...]} or a bare array of exponents.
MonomialSet set_from(const json& j);
json to_json(const MonomialSet& s);

/// {"kind": "affine", "a", "b"}, {"kind": "geometric", "a", "r"},
/// {"kind": "power", "a", "p", "b"}, {"kind": "explicit", "values"} or a bare array.
SequenceSpec sequence_from(const json& j);

/// {"kind": "monomial", "s", "coef"}; {"kind": "indicator", "s"} for chi_[0,s] or
/// {"kind": "indicator", "a", "b", "t"} for chi_[a,b] x^t; {"kind":
/// "linear-combination", "terms"}; {"kind": "table", "x", "y"}. The string "const"
/// stands for the constant 1.
FunctionSpec function_from(const json& j);

/// {"atoms": [{"tau": [re, im], "w": w}, ...]}.
AtomicMeasure measure_from(const json& j);
json to_json(const AtomicMeasure& mu);

/// {"kind": "polynomial", "coeffs"}, {"kind": "rational", "num", "den"},
/// {"kind": "table", "points", "values"}.
Multiplier multiplier_from(const json& j);

/// {"terms": [{"coef": [re, im], "exponent": {...}}, ...]}.
MonomialCombination combination_from(const json& j);
json to_json(const MonomialCombination& f);

/// {"coefficients": [[re, im], ...], "tail_norm_sq": t}.
LaguerreExpansion expansion_from(const json& j);
json to_json(const LaguerreExpansion& f);

json to_json(const DistanceResult& r);
json to_json(const DensityVerdict& v, std::size_t n_terms);
json to_json(const PickResult& r);
json to_json(const ModelSpaceDistance& r);
json to_json(const MembershipVerdict& v);
json to_json(const std::vector<CurvePoint>& curve);

/// n,distance,condition_estimate rows; missing values are left empty.
std::string curve_csv(const std::vector<CurvePoint>& curve);

}  // namespace mono::io
