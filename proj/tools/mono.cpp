#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "mono/acceptance.hpp"
#include "mono/io/json_io.hpp"
#include "mono/operators/unitary.hpp"
#include "mono/quadrature.hpp"

using namespace mono;
using io::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
  std::string precision = "double";
  std::string out;
  std::string format;
  std::string manifest;
  std::string replay;
  std::uint64_t seed = 20240601;
};

struct Output {
  std::string text;
};

DistanceOptions distance_options(const Globals& g) {
  DistanceOptions opt;
  opt.gram.precision = g.precision == "extended" ? Precision::Extended : Precision::Double;
  return opt;
}

// --t 1, --t 0.5,1, --t '[0.5,1]' and --t '{"re":0.5,"im":1,"logpow":1}' are all accepted.
Exponent exponent_arg(const std::string& text) {
  if (!text.empty() && (text[0] == '{' || text[0] == '[' || text[0] == '@')) return io::exponent_from(io::parse(text));
  return Exponent(io::parse_complex(text));
}

FunctionSpec function_arg(const std::string& text) {
  if (text == "const" || text == "1") return FunctionSpec::monomial(Exponent(0.0));
  return io::function_from(io::parse(text));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Pairings by quadrature for targets without a closed form.
DistanceResult sampled_distance(const FunctionSpec& f, const MonomialSet& set, const DistanceOptions& opt) {
  const auto s = f.sampled();
  quad::Options q;
  q.abs_tol = 1e-13;
  const double norm = quad::integrate_unit_graded([&](double x) { return Complex(std::norm(s(x))); }, s.breakpoints, q)
                          .value.real();
  const PairingOracle pairing = [&](const Exponent& m) {
    return quad::integrate_unit_graded(
               [&](double x) {
                 const double l = std::log(x);
                 return s(x) * std::conj(std::exp(m.value() * l)) * std::pow(l, m.logpow());
               },
               s.breakpoints, q)
        .value;
  };
  auto r = distance_to_span(pairing, norm, set, opt);
  r.method += "+quadrature";
  return r;
}

std::vector<Complex> random_disk_grid(int n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) z.push_back(std::polar(0.9 * std::sqrt(u(g)), 2.0 * M_PI * (u(g) - 0.5)));
  return z;
}

void emit(const Globals& g, const std::string& text) {
  const bool to_file = !g.out.empty() && g.out != "csv" && g.out != "json";
  if (!to_file) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

std::string effective_format(const Globals& g, const char* dflt) {
  if (!g.format.empty()) return g.format;
  if (g.out == "csv" || g.out == "json") return g.out;
  return dflt;
}

json option_values(const CLI::App* app) {
  json p = json::object();
  for (const auto* o : app->get_options()) {
    if (o->count() == 0 || o->get_name().empty() || o->get_name() == "--help") continue;
    const auto r = o->results();
    std::string name = o->get_name();
    while (!name.empty() && name[0] == '-') name.erase(0, 1);
    p[name] = r.size() == 1 ? json(r[0]) : json(r);
  }
  for (const auto* s : app->get_subcommands()) p[s->get_name()] = option_values(s);
  return p;
}

std::string command_path(const CLI::App* app) {
  std::string path;
  for (const auto* s = app; !s->get_subcommands().empty();) {
    s = s->get_subcommands().front();
    path += (path.empty() ? "" : " ") + s->get_name();
  }
  return path;
}

void write_manifest(const Globals& g, const CLI::App& app, const std::vector<std::string>& argv) {
  std::vector<std::string> replay_args;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--manifest" || argv[i] == "--replay") {
      ++i;
      continue;
    }
    if (argv[i].rfind("--manifest=", 0) == 0 || argv[i].rfind("--replay=", 0) == 0) continue;
    replay_args.push_back(argv[i]);
  }
  const json m = {{"command", command_path(&app)}, {"argv", replay_args},
                  {"parameters", option_values(&app)}, {"precision", g.precision},
                  {"seed", g.seed}, {"tool_version", kVersion}};
  std::ofstream f(g.manifest);
  if (!f) throw std::runtime_error("cannot write manifest " + g.manifest);
  f << m.dump(2) << "\n";
}

int run(const std::vector<std::string>& argv);

int replay(const Globals& g) {
  const json m = io::parse("@" + g.replay);
  if (!m.contains("argv") || !m["argv"].is_array()) throw io::InputError("manifest has no argv list");
  std::vector<std::string> args = m["argv"].get<std::vector<std::string>>();
  // A new --out given alongside --replay replaces the recorded one.
  if (!g.out.empty()) {
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i] == "--out" && i + 1 < args.size()) args.erase(args.begin() + i, args.begin() + i + 2);
    args.push_back("--out");
    args.push_back(g.out);
  }
  return run(args);
}

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Monomial subspaces of L^2[0,1]: distances, density tests, transforms and operators.", "mono"};
  app.set_version_flag("--version", kVersion);
  app.fallthrough();
  Globals g;
  app.add_option("--precision", g.precision, "Gram solve precision")->check(CLI::IsMember({"double", "extended"}));
  app.add_option("--out", g.out, "Output path (stdout if absent)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--manifest", g.manifest, "Write a run manifest to this path");
  app.add_option("--replay", g.replay, "Re-run the command recorded in a manifest");
  app.add_option("--seed", g.seed, "Seed for randomized grids and property runs");
  app.require_subcommand(0, 1);

  std::function<std::string()> action;

  // muntz
  auto* muntz = app.add_subcommand("muntz", "Density verdict for a sequence of exponents");
  std::string seq_text, criterion = "complex-szasz";
  std::size_t n_terms = 1000;
  muntz->add_option("--seq", seq_text, "Sequence as JSON")->required();
  muntz->add_option("--criterion", criterion, "classical, real-szasz or complex-szasz");
  muntz->add_option("--n-terms", n_terms, "Number of series terms");
  muntz->callback([&] {
    action = [&] {
      VerdictOptions opt;
      opt.n_terms = n_terms;
      opt.tail_window = std::min<std::size_t>(opt.tail_window, n_terms);
      const auto v = muntz_verdict(io::sequence_from(io::parse(seq_text)), criterion_from_string(criterion), opt);
      return dump(io::to_json(v, n_terms));
    };
  });

  // dist
  auto* dist = app.add_subcommand("dist", "Distance from a function to a finite monomial space");
  std::string t_text, f_text, set_text;
  auto* t_opt = dist->add_option("--t", t_text, "Exponent of the target monomial");
  dist->add_option("--f", f_text, "Target function spec (JSON)")->excludes(t_opt);
  dist->add_option("--set", set_text, "Monomial set as JSON")->required();
  dist->callback([&] {
    action = [&] {
      if (t_text.empty() && f_text.empty()) throw io::InputError("dist needs --t or --f");
      const auto set = io::set_from(io::parse(set_text));
      const auto opt = distance_options(g);
      const FunctionSpec f = t_text.empty() ? function_arg(f_text) : FunctionSpec::monomial(exponent_arg(t_text));
      const auto closed = f.closed_form();
      const auto r = closed ? distance_auto(*closed, set, opt) : sampled_distance(f, set, opt);
      return dump(io::to_json(r));
    };
  });

  // sarason eval
  auto* sarason = app.add_subcommand("sarason", "Sarason transform");
  sarason->fallthrough();
  sarason->require_subcommand(1);
  auto* s_eval = sarason->add_subcommand("eval", "Evaluate Uf at a disk point");
  std::string z_text;
  s_eval->add_option("--f", f_text, "Function spec (JSON)")->required();
  s_eval->add_option("--z", z_text, "Disk point re,im")->required();
  s_eval->callback([&] {
    action = [&] {
      const auto f = function_arg(f_text);
      const DiskPoint z(io::parse_complex(z_text));
      const auto v = f.transform(z);
      return dump({{"z", io::to_json(z.z())}, {"value", io::to_json(v.value)}, {"error", v.error}});
    };
  });

  // laguerre expand
  auto* laguerre = app.add_subcommand("laguerre", "Laguerre basis");
  laguerre->fallthrough();
  laguerre->require_subcommand(1);
  auto* l_expand = laguerre->add_subcommand("expand", "Laguerre coordinates of x^s");
  std::string s_text;
  std::size_t n_coef = 0;
  l_expand->add_option("--s", s_text, "Exponent")->required();
  l_expand->add_option("--n", n_coef, "Highest index kept (default: tail below 1e-16)");
  l_expand->callback([&] {
    action = [&] {
      const auto s = exponent_arg(s_text);
      const std::size_t n = n_coef > 0 ? n_coef : default_truncation(s);
      auto out = io::to_json(expand_monomial(s, n));
      out["s"] = io::to_json(s);
      out["n"] = n;
      return dump(out);
    };
  });

  // op apply / op pick
  auto* op = app.add_subcommand("op", "Monomial operators");
  op->fallthrough();
  op->require_subcommand(1);
  auto* o_apply = op->add_subcommand("apply", "Apply H, X or V");
  std::string op_name, input_text;
  o_apply->add_option("--op", op_name, "H, X or V")->required();
  o_apply->add_option("--input", input_text, "Monomial combination {\"terms\"} or expansion {\"coefficients\"}")
      ->required();
  o_apply->callback([&] {
    action = [&] {
      const auto which = hardy_op_from_string(op_name);
      const json in = io::parse(input_text);
      if (in.is_object() && in.contains("coefficients")) return dump(io::to_json(apply(which, io::expansion_from(in))));
      return dump(io::to_json(apply(which, io::combination_from(in))));
    };
  });
  auto* o_pick = op->add_subcommand("pick", "Pick-matrix test of ||phi(H)|| <= M on a grid");
  std::string phi_text, grid_text;
  double bound_m = 1.0, pick_tol = 1e-12;
  o_pick->add_option("--phi", phi_text, "Multiplier spec (JSON)")->required();
  o_pick->add_option("--M", bound_m, "Norm bound");
  o_pick->add_option("--grid", grid_text, "Exponent grid (JSON)")->required();
  o_pick->add_option("--tol", pick_tol, "Eigenvalue tolerance");
  o_pick->callback([&] {
    action = [&] {
      const auto r = pick_positivity_check(io::multiplier_from(io::parse(phi_text)), bound_m,
                                           io::set_from(io::parse(grid_text)), pick_tol);
      return dump(io::to_json(r));
    };
  });

  // atomic proj / distance / conjugation
  auto* atomic = app.add_subcommand("atomic", "Atomic spaces and singular inner functions");
  atomic->fallthrough();
  atomic->require_subcommand(1);
  auto* a_proj = atomic->add_subcommand("proj", "||P x^s||^2 for the atomic space A_{tau,w}");
  std::string tau_text;
  double weight = 0.0;
  a_proj->add_option("--tau", tau_text, "Atom re,im on the unit circle")->required();
  a_proj->add_option("--w", weight, "Weight")->required();
  a_proj->add_option("--s", s_text, "Exponent")->required();
  a_proj->callback([&] {
    action = [&] {
      const AtomicSpaceParams p(io::parse_complex(tau_text), weight);
      const auto s = exponent_arg(s_text);
      json out = {{"tau", io::to_json(p.tau())}, {"w", p.w()}, {"wp", p.wp()}, {"s", io::to_json(s)},
                  {"proj_norm_sq", proj_norm_sq(p, s)}, {"norm_sq", s.norm_sq()}};
      out["c"] = p.at_one() ? json(nullptr) : json(p.c());
      return dump(out);
    };
  });
  auto* a_dist = atomic->add_subcommand("distance", "Distance from x^s to M(mu) by Toeplitz truncation");
  std::string measure_text;
  std::size_t trunc = 4096;
  a_dist->add_option("--measure", measure_text, "Measure {\"atoms\": [...]}")->required();
  a_dist->add_option("--s", s_text, "Exponent")->required();
  a_dist->add_option("--n", trunc, "Truncation N (at most 8192)");
  a_dist->callback([&] {
    action = [&] {
      const auto mu = io::measure_from(io::parse(measure_text));
      const auto s = exponent_arg(s_text);
      const auto r = model_space_distance(expand_monomial(s, trunc), mu, trunc);
      if (r.instability_warning)
        std::cerr << "warning: truncation sensitivity " << r.sensitivity << " exceeds tolerance\n";
      return dump(io::to_json(r));
    };
  });
  auto* a_conj = atomic->add_subcommand("conjugation", "Check S_{-1,wp} o psi = lambda S_{tau,w} on a random grid");
  double conj_c = 1.0, conj_wp = 1.0;
  int grid_n = 50;
  a_conj->add_option("--c", conj_c, "Real parameter c");
  a_conj->add_option("--wp", conj_wp, "Weight wp");
  a_conj->add_option("--grid-size", grid_n, "Number of grid points")->check(CLI::PositiveNumber);
  a_conj->callback([&] {
    action = [&] {
      const auto r = conjugation_identity_check(conj_c, conj_wp, random_disk_grid(grid_n, g.seed));
      return dump({{"max_deviation", r.max_deviation},
                   {"constant", io::to_json(r.constant)},
                   {"unimodularity_error", r.unimodularity_error},
                   {"constant_formula_error", r.constant_formula_error},
                   {"atom_map_error", r.atom_map_error},
                   {"tau", io::to_json(r.tau)},
                   {"w", r.w}});
    };
  });

  // converge
  auto* converge = app.add_subcommand("converge", "Distance curve along a sequence of monomial spaces");
  std::string family = "interval";
  double rho = 0.25, conv_tol = 1e-3;
  std::size_t n_max = 100;
  converge->add_option("--family", family, "interval or muntz")->check(CLI::IsMember({"interval", "muntz"}));
  converge->add_option("--rho", rho, "Interval family: limit space L^2([rho,1])");
  converge->add_option("--seq", seq_text, "Muntz family: sequence as JSON");
  converge->add_option("--nmax", n_max, "Last index")->check(CLI::PositiveNumber);
  converge->add_option("--f", f_text, "Target (const or function spec JSON)");
  converge->add_option("--criterion", criterion, "Density criterion for the muntz family");
  converge->add_option("--tol", conv_tol, "Membership tolerance");
  converge->callback([&] {
    action = [&] {
      const auto f = function_arg(f_text.empty() ? "const" : f_text);
      const auto opt = distance_options(g);
      json out;
      std::vector<CurvePoint> curve;
      if (family == "interval") {
        curve = distance_curve(f, SubspaceSequence::interval(rho), n_max, opt);
        out["membership"] = io::to_json(limit_membership(curve, conv_tol));
      } else {
        if (seq_text.empty()) throw io::InputError("the muntz family needs --seq");
        const auto r = muntz_limit_experiment(io::sequence_from(io::parse(seq_text)), f, n_max,
                                              criterion_from_string(criterion), conv_tol, opt);
        curve = r.curve;
        out["membership"] = io::to_json(r.membership);
        out["density"] = io::to_json(r.density, VerdictOptions{}.n_terms);
        out["disagreement"] = r.disagreement;
      }
      if (effective_format(g, "csv") == "csv") return io::curve_csv(curve);
      out["family"] = family;
      out["curve"] = io::to_json(curve);
      return dump(out);
    };
  });

  // accept
  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  std::string suite = "primary";
  accept->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"primary"}));
  int accept_status = 0;
  accept->callback([&] {
    action = [&] {
      acceptance::SuiteOptions opt;
      opt.seed = g.seed;
      const auto results = acceptance::run_primary_suite(opt);
      std::string text;
      json rows = json::array();
      for (const auto& r : results) {
        if (!r.passed) accept_status = 1;
        text += acceptance::format_line(r) + "\n";
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                        {"seconds", r.seconds}, {"time_limit", r.time_limit}});
      }
      if (effective_format(g, "text") == "json") return dump({{"suite", suite}, {"criteria", rows}});
      return text;
    };
  });

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!g.replay.empty()) return replay(g);
  if (!action) {
    std::cerr << app.help();
    return 2;
  }
  const std::string text = action();
  emit(g, text);
  if (!g.manifest.empty()) write_manifest(g, app, argv);
  return accept_status;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args);
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
