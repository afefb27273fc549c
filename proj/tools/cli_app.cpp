#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgw/coulomb.hpp"
#include "pgw/errors.hpp"
#include "pgw/fit.hpp"
#include "pgw/laguerre.hpp"
#include "pgw/ortho.hpp"
#include "pgw/painleve.hpp"
#include "pgw/serialize.hpp"
#include "pgw/series.hpp"

namespace pgw::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::table: return "table";
    case Command::verify: return "verify";
    case Command::asymptotics: return "asymptotics";
    case Command::fit: return "fit";
    case Command::equilibrium: return "equilibrium";
    case Command::bridge: return "bridge";
  }
  return "?";
}

struct Output {
  Json results;
  Csv csv;
  Json summary = Json::object();
  bool pass = true;
};

Real parse_real(const std::string& s, const char* flag) {
  try {
    return Real(s);
  } catch (const std::invalid_argument&) {
    throw ConfigError(std::string("--") + flag + " must be a decimal real, got '" + s + "'");
  }
}

long parse_degree(const std::string& s) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1) throw ConfigError("--n must be a positive integer for this command, got '" + s + "'");
  return v;
}

// Degree whose table sizes the automatic precision.
long sizing_degree(const RunConfig& c) {
  switch (c.command) {
    case Command::verify: return c.nmax + 2;
    case Command::bridge: return 2 * (c.n ? parse_degree(*c.n) : c.nmax) + 2;
    case Command::table:
    case Command::asymptotics:
    case Command::fit: return c.nmax;
    case Command::equilibrium: return 0;
  }
  return 0;
}

NumericContext make_context(const RunConfig& c) {
  const long bits = c.precision_bits ? *c.precision_bits : precision_for_degree(sizing_degree(c));
  if (bits < 128) throw ConfigError("--prec-bits must be >= 128, got " + std::to_string(bits));
  NumericContext ctx = NumericContext::with_precision(bits);
  ctx.validate();
  return ctx;
}

WeightParams make_params(const RunConfig& c) {
  WeightParams p(parse_real(c.t, "t"), parse_real(c.lambda, "lambda"));
  if (p.t.sign() <= 0) throw ConfigError("t > 0 required, got " + c.t);
  return p;
}

void require_one_cut(const WeightParams& p, const RunConfig& c) {
  if (!p.one_cut()) {
    throw OneCutError(std::string(command_name(c.command)) + " requires the one-cut regime lambda*t <= 1, got lambda*t = " +
                      (p.lambda * p.t).str(12));
  }
}

void summarize(Output& o, const std::vector<ResidualReport>& reports) {
  long passed = 0;
  Real worst(0);
  for (const auto& r : reports) {
    if (r.pass) ++passed;
    if (r.status != CheckStatus::degenerate) worst = max(worst, r.residual);
  }
  o.pass = passed == static_cast<long>(reports.size());
  o.summary["checks_run"] = reports.size();
  o.summary["checks_passed"] = passed;
  o.summary["max_residual"] = decimal(worst);
  o.summary["pass"] = o.pass;
  o.results = Json::array();
  for (const auto& r : reports) o.results.push_back(to_json(r));
  o.csv = residuals_csv(reports);
}

void append(std::vector<ResidualReport>& to, std::vector<ResidualReport> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

Output do_table(const RunConfig& c, const NumericContext& ctx, const WeightParams& params) {
  const OrthoTable tb = build_ortho_table(c.nmax, params, ctx);
  Output o;
  o.results = to_json(tb);
  o.csv = table_csv(tb);
  o.summary["N"] = tb.N;
  o.summary["precision_bits"] = tb.precision_bits;
  return o;
}

Output do_verify(const RunConfig& c, const NumericContext& ctx, const WeightParams& params) {
  if (c.nmax < 2) throw ConfigError("verify needs --nmax >= 2");
  const VerifyTolerances tol =
      c.tolerance ? VerifyTolerances::uniform(parse_real(*c.tolerance, "tol")) : VerifyTolerances();

  std::vector<long> fd_n;
  if (c.n) {
    fd_n.push_back(parse_degree(*c.n));
    if (fd_n[0] > c.nmax) throw ConfigError("--n must not exceed --nmax");
  } else {
    for (long n : {2L, 5L, 10L}) {
      if (n <= c.nmax) fd_n.push_back(n);
    }
  }

  const OrthoTable tb = build_ortho_table(c.nmax + 1, params, ctx);
  std::vector<ResidualReport> reports;
  append(reports, check_ladder_identities(tb, tol));
  append(reports, check_difference_equations(tb, ctx, tol));
  for (long n : fd_n) {
    append(reports, check_t_evolution(n, params, ctx, tol));
    try {
      append(reports, check_painleve_v(n, params, ctx, tol));
    } catch (const DegenerateTransformError& e) {
      const std::string note = params.lambda.is_zero() ? "degenerate (lambda=0)" : e.what();
      reports.push_back(degenerate_report("pv", params, n, tol.painleve, note));
      reports.push_back(degenerate_report("Rnd", params, n, tol.painleve, note));
    }
    if (n >= 2) append(reports, check_sigma_form(n, params, ctx, tol));
  }
  const auto z = default_ode_samples();
  for (long n = 1; n <= c.nmax; ++n) reports.push_back(check_polynomial_ode(n, z, tb, tol));

  Output o;
  summarize(o, reports);
  return o;
}

// n from --n, else nmax, nmax/2, ... down to 1, ascending.
std::vector<Real> continuous_n(const RunConfig& c) {
  std::vector<Real> ns;
  if (c.n) {
    ns.push_back(parse_real(*c.n, "n"));
    if (ns[0].sign() <= 0) throw ConfigError("--n must be positive");
    return ns;
  }
  for (Real n(c.nmax); n >= 1; n /= 2) ns.push_back(n);
  std::reverse(ns.begin(), ns.end());
  return ns;
}

Output do_asymptotics(const RunConfig& c, const NumericContext& ctx, const WeightParams& params) {
  const SeriesKind kind = parse_series_kind(c.kind);
  require_one_cut(params, c);
  Output o;
  o.results = Json::array();
  o.csv.header = {"kind", "n", "exact", "series", "difference"};
  auto row = [&](const std::string& n, const Real& exact, const Real& series) {
    const Real diff = exact - series;
    o.results.push_back(Json{{"kind", to_string(kind)},
                             {"n", n},
                             {"exact", decimal(exact)},
                             {"series", decimal(series)},
                             {"difference", decimal(diff)}});
    o.csv.rows.push_back({to_string(kind), n, decimal(exact), decimal(series), decimal(diff)});
  };

  if (kind == SeriesKind::endpoint_b2 || kind == SeriesKind::lagrange_A || kind == SeriesKind::free_energy_F) {
    for (const Real& n : continuous_n(c)) {
      const EquilibriumMeasure eq = solve_endpoint(n, params, ctx);
      Real exact;
      if (kind == SeriesKind::endpoint_b2) exact = eq.b2;
      else if (kind == SeriesKind::lagrange_A) exact = eq.A;
      else exact = free_energy_numeric(eq, ctx);
      row(decimal(n), exact, series_eval(kind, n, params));
    }
    o.summary["rows"] = o.csv.rows.size();
    return o;
  }

  const OrthoTable tb = build_ortho_table(c.nmax, params, ctx);
  std::optional<SeriesConstants> constants;
  if (kind == SeriesKind::logD) {
    const FitResult f = fit_constants_from_table(tb, default_fit_grid(c.nmax));
    constants = SeriesConstants{f.c1, f.c0};
    o.summary["c1"] = decimal(f.c1);
    o.summary["c0"] = decimal(f.c0);
  }
  long lo = 1;
  long hi = c.nmax;
  if (c.n) {
    lo = hi = parse_degree(*c.n);
    if (lo > c.nmax) throw ConfigError("--n must not exceed --nmax");
  }
  for (long n = lo; n <= hi; ++n) {
    const auto i = static_cast<size_t>(n);
    Real exact;
    switch (kind) {
      case SeriesKind::beta: exact = tb.beta[i]; break;
      case SeriesKind::p_coeff: exact = tb.p[i]; break;
      case SeriesKind::H: exact = tb.H[i]; break;
      default: exact = tb.logD[i]; break;
    }
    row(std::to_string(n), exact, series_eval(kind, Real(n), params, constants));
  }
  o.summary["rows"] = o.csv.rows.size();
  return o;
}

Output do_fit(const RunConfig& c, const NumericContext& ctx, const WeightParams& params) {
  require_one_cut(params, c);
  const auto grid = default_fit_grid(c.nmax);
  if (grid.size() < 3) throw ConfigError("fit needs --nmax >= 18 for a grid of at least 3 points");
  const Real tol = c.tolerance ? parse_real(*c.tolerance, "tol") : Real("1e-3");
  const OrthoTable tb = build_ortho_table(c.nmax, params, ctx);
  const FitResult f = fit_constants_from_table(tb, grid);

  Output o;
  o.pass = f.c1_error <= tol && f.c0_error <= tol;
  o.results = to_json(f);
  o.csv.header = {"lambda", "t", "c1", "c0", "c1_error", "c0_error", "n_min", "n_max"};
  o.csv.rows.push_back({decimal(f.lambda), decimal(f.t), decimal(f.c1), decimal(f.c0), decimal(f.c1_error),
                        decimal(f.c0_error), std::to_string(grid.front()), std::to_string(grid.back())});
  if (params.lambda.is_zero()) {
    const SeriesConstants g = gaussian_constants();
    const Real d1 = abs(f.c1 - g.c1);
    const Real d0 = abs(f.c0 - g.c0);
    o.summary["c1_vs_ln_2pi"] = decimal(d1);
    o.summary["c0_vs_zeta_prime"] = decimal(d0);
    o.pass = o.pass && d1 <= Real("1e-6") && d0 <= tol;
  }
  o.summary["tolerance"] = decimal(tol);
  o.summary["pass"] = o.pass;
  return o;
}

Output do_equilibrium(const RunConfig& c, const NumericContext& ctx, const WeightParams& params) {
  require_one_cut(params, c);
  const Real n = c.n ? continuous_n(c)[0] : Real(c.nmax);
  const Real tol = c.tolerance ? parse_real(*c.tolerance, "tol") : Real("1e-40");
  const EquilibriumMeasure eq = solve_endpoint(n, params, ctx);
  const Real mass = normalization_check(eq, ctx);
  const Real norm_res = abs(mass - n);
  const Real end_res = endpoint_residual(eq);

  Output o;
  o.pass = norm_res <= tol;
  o.results = to_json(eq);
  o.results["endpoint_residual"] = decimal(end_res);
  o.results["normalization"] = decimal(mass);
  o.results["normalization_residual"] = decimal(norm_res);
  o.csv.header = {"quantity", "x", "value"};
  o.csv.rows = {{"b", "", decimal(eq.b)},
                {"b2", "", decimal(eq.b2)},
                {"A", "", decimal(eq.A)},
                {"endpoint_residual", "", decimal(end_res)},
                {"normalization_residual", "", decimal(norm_res)}};
  Json samples = Json::array();
  for (long k = 0; k < 8; ++k) {
    const Real x = eq.b * k / 8;
    const Real s = density(x, eq);
    samples.push_back(Json{{"x", decimal(x)}, {"sigma", decimal(s)}});
    o.csv.rows.push_back({"density", decimal(x), decimal(s)});
  }
  o.results["density_samples"] = std::move(samples);
  o.summary["tolerance"] = decimal(tol);
  o.summary["pass"] = o.pass;
  return o;
}

Output do_bridge(const RunConfig& c, const NumericContext& ctx, const WeightParams& params) {
  const long n = c.n ? parse_degree(*c.n) : c.nmax;
  BridgeTolerances tol;
  if (c.tolerance) {
    const Real u = parse_real(*c.tolerance, "tol");
    tol = BridgeTolerances{u, u, u};
  }
  Output o;
  summarize(o, check_weight_split(n, params, ctx, tol));
  return o;
}

Json config_json(const RunConfig& c, const NumericContext& ctx) {
  Json j{{"command", command_name(c.command)},
         {"t", c.t},
         {"lambda", c.lambda},
         {"nmax", c.nmax}};
  if (c.n) j["n"] = *c.n;
  j["precision_bits"] = ctx.precision_bits;
  j["fd_step"] = decimal(ctx.fd_step);
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  j["format"] = c.format == Format::csv ? "csv" : "json";
  if (c.command == Command::asymptotics) j["kind"] = c.kind;
  return j;
}

std::string render(const RunConfig& c, const NumericContext& ctx, const Output& o) {
  if (c.format == Format::json) {
    Json doc{{"config", config_json(c, ctx)}, {"results", o.results}, {"summary", o.summary}};
    return doc.dump(2) + "\n";
  }
  std::string s = o.csv.str();
  if (!o.summary.empty()) {
    s += "# summary";
    for (const auto& [k, v] : o.summary.items()) s += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    s += "\n";
  }
  return s;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.nmax < 1) throw ConfigError("--nmax must be >= 1, got " + std::to_string(c.nmax));
    const NumericContext ctx = make_context(c);
    ContextScope scope(ctx);
    const WeightParams params = make_params(c);

    Output o;
    switch (c.command) {
      case Command::table: o = do_table(c, ctx, params); break;
      case Command::verify: o = do_verify(c, ctx, params); break;
      case Command::asymptotics: o = do_asymptotics(c, ctx, params); break;
      case Command::fit: o = do_fit(c, ctx, params); break;
      case Command::equilibrium: o = do_equilibrium(c, ctx, params); break;
      case Command::bridge: o = do_bridge(c, ctx, params); break;
    }
    const std::string text = render(c, ctx, o);
    if (c.out_path) {
      std::ofstream f(*c.out_path, std::ios::binary);
      if (!f) throw ConfigError("cannot open --out path '" + *c.out_path + "'");
      f << text;
      if (!f) throw ConfigError("write to --out path '" + *c.out_path + "' failed");
    } else {
      out << text;
    }
    return o.pass ? kOk : kChecksFailed;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal polynomials for the weight exp(-x^2)(1+t x^2)^lambda", "pgw"};
  RunConfig c;
  std::string command;
  std::string format = "csv";
  std::string n, tol, out_path;
  long bits = 0;

  app.add_option("command", command, "table | verify | asymptotics | fit | equilibrium | bridge")
      ->required()
      ->check(CLI::IsMember({"table", "verify", "asymptotics", "fit", "equilibrium", "bridge"}));
  app.add_option("--t", c.t, "deformation parameter t > 0")->capture_default_str();
  app.add_option("--lambda", c.lambda, "exponent lambda")->capture_default_str();
  app.add_option("--nmax", c.nmax, "largest degree")->capture_default_str();
  auto* n_opt = app.add_option("--n", n, "single degree, or particle number for equilibrium");
  auto* bits_opt = app.add_option("--prec-bits", bits, "working precision in bits (>= 128)");
  auto* tol_opt = app.add_option("--tol", tol, "tolerance applied to every check");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  auto* out_opt = app.add_option("--out", out_path, "write the artifact here instead of stdout");
  app.add_option("--kind", c.kind, "beta | p | H | logD | b2 | A | F (asymptotics)")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  const std::vector<std::pair<const char*, Command>> names = {
      {"table", Command::table}, {"verify", Command::verify},           {"asymptotics", Command::asymptotics},
      {"fit", Command::fit},     {"equilibrium", Command::equilibrium}, {"bridge", Command::bridge}};
  for (const auto& [name, cmd] : names) {
    if (command == name) c.command = cmd;
  }
  c.format = format == "json" ? Format::json : Format::csv;
  if (n_opt->count()) c.n = n;
  if (bits_opt->count()) c.precision_bits = bits;
  if (tol_opt->count()) c.tolerance = tol;
  if (out_opt->count()) c.out_path = out_path;
  return run(c, out, err);
}

}  // namespace pgw::cli
