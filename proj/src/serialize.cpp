#include "pgw/serialize.hpp"

namespace pgw {

namespace {

Json decimals(const std::vector<Real>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(decimal(x));
  return a;
}

std::string quote(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string decimal(const Real& x) { return x.str(); }

Json to_json(const WeightParams& p) { return Json{{"t", decimal(p.t)}, {"lambda", decimal(p.lambda)}}; }

Json to_json(const NumericContext& ctx) {
  return Json{{"precision_bits", ctx.precision_bits},
              {"quad_rel_tol", decimal(ctx.quad_rel_tol)},
              {"fd_step", decimal(ctx.fd_step)},
              {"fd_order", ctx.fd_order}};
}

Json to_json(const ResidualReport& r) {
  Json j{{"check_id", r.check_id},
         {"t", decimal(r.params.t)},
         {"lambda", decimal(r.params.lambda)},
         {"n_min", r.n_min},
         {"n_max", r.n_max},
         {"worst_n", r.worst_n},
         {"residual", decimal(r.residual)},
         {"scale", decimal(r.scale)},
         {"tolerance", decimal(r.tolerance)},
         {"pass", r.pass},
         {"status", to_string(r.status)}};
  if (r.has_half_step) j["residual_half_step"] = decimal(r.residual_half_step);
  if (!r.note.empty()) j["note"] = r.note;
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(Json{{"n", s.n}, {"residual", decimal(s.residual)}});
  j["samples"] = std::move(samples);
  return j;
}

Json to_json(const OrthoTable& tb) {
  return Json{{"t", decimal(tb.params.t)},
              {"lambda", decimal(tb.params.lambda)},
              {"N", tb.N},
              {"precision_bits", tb.precision_bits},
              {"h", decimals(tb.h)},
              {"beta", decimals(tb.beta)},
              {"p", decimals(tb.p)},
              {"r", decimals(tb.r)},
              {"R", decimals(tb.R)},
              {"H", decimals(tb.H)},
              {"D", decimals(tb.D)},
              {"logD", decimals(tb.logD)}};
}

Json to_json(const LaguerreTable& tb) {
  return Json{{"alpha", decimal(tb.alpha)},
              {"ttilde", decimal(tb.ttilde)},
              {"lambda", decimal(tb.lambda)},
              {"N", tb.N},
              {"precision_bits", tb.precision_bits},
              {"h", decimals(tb.ht)},
              {"D", decimals(tb.Dt)},
              {"p", decimals(tb.pt)},
              {"alpha_n", decimals(tb.alpha_t)},
              {"beta_n", decimals(tb.beta_t)}};
}

Json to_json(const FitResult& f) {
  return Json{{"lambda", decimal(f.lambda)}, {"t", decimal(f.t)},         {"n_grid", f.n_grid},
              {"c1", decimal(f.c1)},         {"c0", decimal(f.c0)},       {"c1_error", decimal(f.c1_error)},
              {"c0_error", decimal(f.c0_error)}};
}

Json to_json(const EquilibriumMeasure& eq) {
  return Json{{"t", decimal(eq.params.t)}, {"lambda", decimal(eq.params.lambda)},
              {"n", decimal(eq.n)},        {"b", decimal(eq.b)},
              {"b2", decimal(eq.b2)},      {"A", decimal(eq.A)}};
}

std::string Csv::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += quote(fields[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

Csv residuals_csv(const std::vector<ResidualReport>& reports) {
  Csv c;
  c.header = {"check_id", "t", "lambda", "n", "n_min", "n_max", "residual", "tolerance", "pass", "status",
              "residual_half_step", "note"};
  for (const auto& r : reports) {
    c.rows.push_back({r.check_id, decimal(r.params.t), decimal(r.params.lambda), std::to_string(r.worst_n),
                      std::to_string(r.n_min), std::to_string(r.n_max), decimal(r.residual), decimal(r.tolerance),
                      r.pass ? "true" : "false", to_string(r.status),
                      r.has_half_step ? decimal(r.residual_half_step) : "", r.note});
  }
  return c;
}

Csv table_csv(const OrthoTable& tb) {
  Csv c;
  c.header = {"n", "h", "beta", "p", "r", "R", "H", "D", "logD"};
  for (long n = 0; n <= tb.N; ++n) {
    const auto i = static_cast<size_t>(n);
    c.rows.push_back({std::to_string(n), decimal(tb.h[i]), decimal(tb.beta[i]), decimal(tb.p[i]), decimal(tb.r[i]),
                      decimal(tb.R[i]), decimal(tb.H[i]), decimal(tb.D[i]), decimal(tb.logD[i])});
  }
  return c;
}

}  // namespace pgw
