#include "mono/io/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace mono::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<Complex> complex_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Complex> out;
  for (const auto& v : j) out.push_back(complex_from(v));
  return out;
}

Complex opt_complex(const json& j, const char* key, Complex dflt) {
  return j.contains(key) ? complex_from(j.at(key)) : dflt;
}

std::string kind_of(const json& j) {
  const auto& k = field(j, "kind");
  if (!k.is_string()) throw InputError("'kind' must be a string");
  return k.get<std::string>();
}

// Shortest text that reads back to the same double.
std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

json parse(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InputError("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Complex complex_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object() && j.contains("re"))
    return {number(j.at("re"), "re"), j.contains("im") ? number(j.at("im"), "im") : 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  throw InputError("expected a complex number as [re, im], got " + j.dump());
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto read = [&](const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    while (b < s.data() + s.size() && *b == ' ') ++b;
    const auto r = std::from_chars(b, s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw InputError("cannot read number '" + s + "'");
    return v;
  };
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) return complex_from(parse(text));
  if (comma == std::string::npos) return read(text);
  return {read(text.substr(0, comma)), read(text.substr(comma + 1))};
}

Exponent exponent_from(const json& j) {
  if (j.is_object()) {
    const double re = number(field(j, "re"), "re");
    const double im = j.contains("im") ? number(j.at("im"), "im") : 0.0;
    const int k = j.contains("logpow") ? j.at("logpow").get<int>() : 0;
    return Exponent(re, im, k);
  }
  return Exponent(complex_from(j));
}

json to_json(const Exponent& e) { return {{"re", e.re()}, {"im", e.im()}, {"logpow", e.logpow()}}; }

MonomialSet set_from(const json& j) {
  const json& list = j.is_array() ? j : field(j, "exponents");
  if (!list.is_array()) throw InputError("'exponents' must be an array");
  std::vector<Exponent> e;
  for (const auto& v : list) e.push_back(exponent_from(v));
  return MonomialSet(std::move(e));
}

json to_json(const MonomialSet& s) {
  json list = json::array();
  for (const auto& e : s) list.push_back(to_json(e));
  return {{"exponents", list}};
}

SequenceSpec sequence_from(const json& j) {
  if (j.is_array()) return SequenceSpec::explicit_list(complex_list(j, "sequence"));
  const auto kind = kind_of(j);
  if (kind == "affine") return SequenceSpec::affine(complex_from(field(j, "a")), opt_complex(j, "b", 0.0));
  if (kind == "geometric") return SequenceSpec::geometric(complex_from(field(j, "a")), complex_from(field(j, "r")));
  if (kind == "power")
    return SequenceSpec::power(opt_complex(j, "a", 1.0), number(field(j, "p"), "p"), opt_complex(j, "b", 0.0));
  if (kind == "explicit") return SequenceSpec::explicit_list(complex_list(field(j, "values"), "values"));
  throw InputError("unknown sequence kind '" + kind + "'");
}

FunctionSpec function_from(const json& j) {
  if (j.is_string() && (j.get<std::string>() == "const" || j.get<std::string>() == "1"))
    return FunctionSpec::monomial(Exponent(0.0));
  const auto kind = kind_of(j);
  const Complex coef = opt_complex(j, "coef", 1.0);
  if (kind == "monomial") return FunctionSpec::monomial(exponent_from(field(j, "s")), coef);
  if (kind == "indicator") {
    const Exponent t = j.contains("t") ? exponent_from(j.at("t")) : Exponent(0.0);
    if (j.contains("s")) return FunctionSpec::indicator(0.0, number(j.at("s"), "s"), t, coef);
    return FunctionSpec::indicator(number(field(j, "a"), "a"), j.contains("b") ? number(j.at("b"), "b") : 1.0, t,
                                   coef);
  }
  if (kind == "linear-combination") {
    const auto& terms = field(j, "terms");
    if (!terms.is_array()) throw InputError("'terms' must be an array");
    std::vector<FunctionSpec> parts;
    for (const auto& t : terms) parts.push_back(function_from(t));
    return FunctionSpec::combination(std::move(parts));
  }
  if (kind == "table") {
    const auto& x = field(j, "x");
    if (!x.is_array()) throw InputError("'x' must be an array");
    std::vector<double> xs;
    for (const auto& v : x) xs.push_back(number(v, "x"));
    return FunctionSpec::table(std::move(xs), complex_list(field(j, "y"), "y"));
  }
  throw InputError("unknown function kind '" + kind + "'");
}

AtomicMeasure measure_from(const json& j) {
  const auto& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw InputError("'atoms' must be an array");
  std::vector<Atom> out;
  for (const auto& a : atoms) out.push_back({complex_from(field(a, "tau")), number(field(a, "w"), "w")});
  return AtomicMeasure(std::move(out));
}

json to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"tau", to_json(a.tau)}, {"w", a.w}});
  return {{"atoms", atoms}};
}

Multiplier multiplier_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "identity") return Multiplier::identity();
  const auto kind = kind_of(j);
  if (kind == "polynomial") return Multiplier::polynomial(complex_list(field(j, "coeffs"), "coeffs"));
  if (kind == "rational")
    return Multiplier::rational(complex_list(field(j, "num"), "num"), complex_list(field(j, "den"), "den"));
  if (kind == "table")
    return Multiplier::table(complex_list(field(j, "points"), "points"), complex_list(field(j, "values"), "values"));
  throw InputError("unknown multiplier kind '" + kind + "'");
}

MonomialCombination combination_from(const json& j) {
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  MonomialCombination f;
  for (const auto& t : terms) f.terms.push_back({opt_complex(t, "coef", 1.0), exponent_from(field(t, "exponent"))});
  return f;
}

json to_json(const MonomialCombination& f) {
  json terms = json::array();
  for (const auto& t : f.terms) terms.push_back({{"coef", to_json(t.coef)}, {"exponent", to_json(t.exponent)}});
  return {{"terms", terms}};
}

LaguerreExpansion expansion_from(const json& j) {
  LaguerreExpansion f;
  f.coeffs = complex_list(field(j, "coefficients"), "coefficients");
  if (j.contains("tail_norm_sq")) f.tail_norm_sq = number(j.at("tail_norm_sq"), "tail_norm_sq");
  return f;
}

json to_json(const LaguerreExpansion& f) {
  json c = json::array();
  for (const auto& z : f.coeffs) c.push_back(to_json(z));
  return {{"coefficients", c}, {"tail_norm_sq", f.tail_norm_sq}};
}

json to_json(const DistanceResult& r) {
  json c = json::array();
  for (const auto& z : r.coefficients) c.push_back(to_json(z));
  json out = {{"distance", r.distance}, {"coefficients", c}, {"digits", r.digits},
              {"ill_conditioned", r.ill_conditioned}, {"method", r.method}};
  out["condition_estimate"] = std::isfinite(r.condition_estimate) ? json(r.condition_estimate) : json(nullptr);
  return out;
}

json to_json(const DensityVerdict& v, std::size_t n_terms) {
  return {{"density", to_string(v.density)},
          {"criterion", to_string(v.criterion)},
          {"certificate", v.certificate},
          {"n_terms", n_terms},
          {"partial_sum", v.partial_sums.empty() ? 0.0 : v.partial_sums.back()},
          {"tail_increment", v.tail_increment}};
}

json to_json(const PickResult& r) {
  return {{"positive", r.positive},
          {"min_eigenvalue", r.min_eigenvalue},
          {"max_eigenvalue", r.max_eigenvalue},
          {"cauchy_condition", r.cauchy_condition},
          {"conditioning_warning", r.conditioning_warning}};
}

json to_json(const ModelSpaceDistance& r) {
  return {{"distance", r.distance},
          {"distance_half", r.distance_half},
          {"sensitivity", r.sensitivity},
          {"instability_warning", r.instability_warning},
          {"n", r.n}};
}

json to_json(const MembershipVerdict& v) {
  json out = {{"verdict", to_string(v.verdict)},
              {"extrapolated_limit", v.extrapolated_limit},
              {"limit_estimate", v.limit_estimate},
              {"rate", v.rate},
              {"last_value", v.last_value},
              {"window", v.window}};
  out["log_slope"] = std::isfinite(v.log_slope) ? json(v.log_slope) : json(nullptr);
  return out;
}

json to_json(const std::vector<CurvePoint>& curve) {
  json rows = json::array();
  for (const auto& p : curve) {
    json r = {{"n", p.n}, {"digits", p.digits}, {"method", p.method}};
    r["distance"] = p.distance ? json(*p.distance) : json(nullptr);
    r["condition_estimate"] = p.condition_estimate ? json(*p.condition_estimate) : json(nullptr);
    if (!p.error.empty()) r["error"] = p.error;
    rows.push_back(r);
  }
  return rows;
}

std::string curve_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "n,distance,condition_estimate\n";
  for (const auto& p : curve) {
    out += std::to_string(p.n) + ",";
    if (p.distance) out += format_double(*p.distance);
    out += ",";
    if (p.condition_estimate) out += format_double(*p.condition_estimate);
    out += "\n";
  }
  return out;
}

}  // namespace mono::io
