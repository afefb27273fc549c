// One PASS/FAIL line per acceptance criterion. Optional arguments select
// criteria by number, e.g. `acceptance 1 7`.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pgw/coulomb.hpp"
#include "pgw/errors.hpp"
#include "pgw/fit.hpp"
#include "pgw/laguerre.hpp"
#include "pgw/moments.hpp"
#include "pgw/ortho.hpp"
#include "pgw/painleve.hpp"
#include "pgw/series.hpp"
#include "pgw/special.hpp"

using namespace pgw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; the first few are kept for the detail line.
struct Tally {
  bool pass = true;
  std::vector<std::string> failures;
  Real worst{0};

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 3) failures.push_back(what);
  }
  void bound(const Real& value, const Real& limit, const std::string& what) {
    if (value.is_finite()) worst = max(worst, value);
    if (!(value <= limit)) fail(what + " = " + value.str(4));
  }
  Outcome done(const std::string& summary) const {
    std::string d = summary;
    for (const auto& f : failures) d += "; " + f;
    return {pass, d};
  }
};

Real rel(const Real& a, const Real& b) { return b.is_zero() ? abs(a) : abs(a - b) / abs(b); }

WeightParams wp(const char* t, const char* lambda) { return WeightParams(Real(t), Real(lambda)); }

std::string label(const WeightParams& p) { return "t=" + p.t.str(3) + " lambda=" + p.lambda.str(3); }

const std::vector<const char*> kT = {"0.25", "0.5", "1.0"};
const std::vector<const char*> kLambda = {"-0.4", "0.5", "0.7", "1.5"};

// Tables up to degree 31 on the moment grid, shared by criteria 2, 3 and 6.
const OrthoTable& grid_table(const char* t, const char* lambda) {
  static std::map<std::string, OrthoTable> cache;
  const std::string key = std::string(t) + "/" + lambda;
  auto it = cache.find(key);
  if (it == cache.end()) {
    const auto ctx = NumericContext::for_degree(31);
    ContextScope scope(ctx);
    it = cache.emplace(key, build_ortho_table(31, wp(t, lambda), ctx)).first;
  }
  return it->second;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(PGW_CLI_PATH) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  status = pclose(pipe.release());
  return out;
}

Outcome moment_routes() {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  Tally tally;
  for (const char* t : kT) {
    for (const char* l : kLambda) {
      const auto p = wp(t, l);
      const auto table = moment_table_recurrence(20, p, ctx);
      for (long j = 0; j <= 40; ++j) {
        const Real u = moment(j, p, ctx);
        const Real q = moment_quadrature(j, p, ctx);
        const Real r = table->mu[static_cast<size_t>(j)];
        const std::string where = label(p) + " j=" + std::to_string(j);
        if (j % 2) {
          if (!u.is_zero() || !q.is_zero() || !r.is_zero()) tally.fail(where + " odd moment nonzero");
          continue;
        }
        tally.bound(rel(q, u), Real("1e-100"), where + " quadrature vs U");
        tally.bound(rel(r, u), Real("1e-100"), where + " recurrence vs U");
        tally.bound(rel(r, q), Real("1e-100"), where + " recurrence vs quadrature");
      }
    }
  }
  return tally.done("12 (t, lambda), j <= 40, worst pairwise rel " + tally.worst.str(3));
}

Outcome ladder() {
  Tally tally;
  for (const char* t : kT) {
    for (const char* l : kLambda) {
      for (const auto& r : check_ladder_identities(grid_table(t, l))) {
        tally.bound(r.residual, Real("1e-100"), label(r.params) + " " + r.check_id);
        if (r.status != CheckStatus::pass) tally.fail(label(r.params) + " " + r.check_id + " not pass");
      }
    }
    const std::set<std::string> vanishing{"re1", "re3", "re4", "iden"};
    for (const auto& r : check_ladder_identities(grid_table(t, "0"))) {
      if (!r.pass) tally.fail(label(r.params) + " " + r.check_id + " failed");
      const bool flagged = r.status == CheckStatus::degenerate;
      if (flagged != (vanishing.count(r.check_id) == 1)) tally.fail(label(r.params) + " " + r.check_id + " flag");
      if (flagged && r.residual > Real("1e-140")) tally.fail(label(r.params) + " " + r.check_id + " not ~0");
    }
  }
  return tally.done("n <= 30, worst " + tally.worst.str(3) + "; lambda=0 re1 re3 re4 iden degenerate");
}

Outcome difference() {
  Tally tally;
  Real worst_init(0);
  for (const char* t : kT) {
    for (const char* l : kLambda) {
      const OrthoTable& tb = grid_table(t, l);
      const auto ctx = NumericContext::with_precision(tb.precision_bits);
      for (const auto& r : check_difference_equations(tb, ctx)) {
        if (r.check_id == "init_beta1" || r.check_id == "init_p2") {
          worst_init = max(worst_init, r.residual);
          if (!(r.residual <= Real("1e-110"))) tally.fail(label(r.params) + " " + r.check_id);
          continue;
        }
        tally.bound(r.residual, Real("1e-100"), label(r.params) + " " + r.check_id);
      }
    }
  }
  return tally.done("beta, pnd worst " + tally.worst.str(3) + "; beta_1, p(2) vs U worst " + worst_init.str(3));
}

Outcome t_evolution() {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  Tally tally;
  Real weakest_shrink;
  bool first = true;
  const std::set<std::string> ids{"p1", "p2", "dp1", "btd1", "hd", "ri1", "ri2"};
  for (const char* t : {"0.5", "0.8"}) {
    for (const char* l : {"0.7", "-0.4"}) {
      for (long n : {2L, 5L, 12L}) {
        std::set<std::string> seen;
        for (const auto& r : check_t_evolution(n, wp(t, l), ctx)) {
          const std::string where = label(r.params) + " n=" + std::to_string(n) + " " + r.check_id;
          seen.insert(r.check_id);
          tally.bound(r.residual, Real("1e-60"), where);
          if (!r.has_half_step) {
            tally.fail(where + " no half step");
            continue;
          }
          const Real shrink = r.residual / r.residual_half_step;
          if (first || shrink < weakest_shrink) weakest_shrink = shrink;
          first = false;
          if (!(shrink >= 10)) tally.fail(where + " shrink " + shrink.str(3));
        }
        if (seen != ids) tally.fail(label(wp(t, l)) + " missing checks");
      }
    }
  }
  return tally.done("worst " + tally.worst.str(3) + ", weakest half-step shrink " + weakest_shrink.str(3));
}

Outcome painleve() {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  Tally tally;
  for (const char* l : {"0.7", "1.2"}) {
    for (const char* t : {"0.5", "0.8"}) {
      for (long n : {2L, 5L, 10L}) {
        const auto p = wp(t, l);
        const std::string where = label(p) + " n=" + std::to_string(n);
        try {
          auto reports = check_painleve_v(n, p, ctx);
          const auto sigma = check_sigma_form(n, p, ctx);
          reports.insert(reports.end(), sigma.begin(), sigma.end());
          for (const auto& r : reports) {
            tally.bound(r.residual, Real("1e-50"), where + " " + r.check_id);
          }
        } catch (const Error& e) {
          tally.fail(where + " " + e.what());
        }
      }
    }
  }

  // lambda = 0 through the command line
  int status = 0;
  const std::string text = run_cli("verify --t 0.5 --lambda 0 --nmax 10 --format json", status);
  std::size_t degenerate_pv = 0;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& r : doc["results"]) {
      const std::string id = r["check_id"];
      if (r["status"] == "fail") tally.fail("lambda=0 " + id + " failed");
      if (id == "pv" || id == "Rnd") {
        if (r["status"] == "degenerate" && r.value("note", "") == "degenerate (lambda=0)") ++degenerate_pv;
        else tally.fail("lambda=0 " + id + " not degenerate");
      }
    }
  } catch (const std::exception& e) {
    tally.fail(std::string("lambda=0 output: ") + e.what());
  }
  if (status != 0) tally.fail("lambda=0 verify exit status " + std::to_string(status));
  if (degenerate_pv == 0) tally.fail("lambda=0 pv not reported");
  return tally.done("worst " + tally.worst.str(3) + "; lambda=0 pv/Rnd degenerate at " +
                    std::to_string(degenerate_pv / 2) + " n");
}

Outcome polynomial_ode() {
  Tally tally;
  const auto z = default_ode_samples();
  for (const char* t : kT) {
    for (const char* l : kLambda) {
      const OrthoTable& tb = grid_table(t, l);
      WorkingPrecision guard(tb.precision_bits);
      for (long n = 1; n <= 10; ++n) {
        const auto r = check_polynomial_ode(n, z, tb);
        tally.bound(r.residual, Real("1e-80"), label(tb.params) + " n=" + std::to_string(n));
      }
    }
    // Hermite: P'' - 2z P' + 2n P = 0
    const OrthoTable& h = grid_table(t, "0");
    WorkingPrecision guard(h.precision_bits);
    const Real eps("1e-140");
    for (long n = 0; n <= 10; ++n) {
      const std::string where = label(h.params) + " n=" + std::to_string(n);
      tally.bound(check_polynomial_ode(n, z, h).residual, Real("1e-80"), where);
      for (const Real& x : z) {
        const auto c = ode_coefficients(n, x, h);
        if (abs(c.A - 2) > eps || abs(c.B) > eps || abs(c.sumA - 2 * n) > eps || abs(c.v1 - 2 * x) > eps) {
          tally.fail(where + " not Hermite");
        }
      }
    }
  }
  return tally.done("n <= 10, z in {0.3, 1.1, 2.7}, worst " + tally.worst.str(3) + "; lambda=0 is Hermite");
}

Outcome closed_forms() {
  Tally tally;
  for (const char* t : kT) {
    const OrthoTable& tb = grid_table(t, "0");
    WorkingPrecision guard(tb.precision_bits);
    // tables are built for 512 good bits (~154 digits); the extra bits absorb
    // Hankel conditioning
    const Real limit("1e-150");
    Real fact(1);
    for (long n = 0; n <= 30; ++n) {
      if (n > 0) fact *= n;
      const auto i = static_cast<size_t>(n);
      const std::string where = "t=" + std::string(t) + " n=" + std::to_string(n);
      tally.bound(rel(tb.h[i], fact * sqrt(pi()) / pow(Real(2), n)), limit, where + " h");
      if (n >= 1) tally.bound(rel(tb.beta[i], Real(n) / 2), limit, where + " beta");
      tally.bound(abs(tb.p[i] - (-Real(n * n) / 4 + Real(n) / 4)) / max(Real(1), Real(n * n) / 4), limit, where + " p");
    }
  }
  return tally.done("n <= 30, worst rel " + tally.worst.str(3));
}

Outcome remainder_scaling() {
  const auto p = wp("1", "0.5");
  const auto ctx = NumericContext::with_precision(4224);
  ContextScope scope(ctx);
  const auto start = std::chrono::steady_clock::now();
  const OrthoTable tb = build_ortho_table(256, p, ctx);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto err = [&](SeriesKind k, long n) {
    const Real exact = k == SeriesKind::beta ? tb.beta[static_cast<size_t>(n)] : tb.p[static_cast<size_t>(n)];
    return abs(exact - series_eval(k, Real(n), p));
  };
  Tally tally;
  std::ostringstream d;
  for (long n : {64L, 128L}) {
    const Real fb = err(SeriesKind::beta, n) / err(SeriesKind::beta, 2 * n);
    const Real fp = err(SeriesKind::p_coeff, n) / err(SeriesKind::p_coeff, 2 * n);
    const std::string span = std::to_string(n) + "->" + std::to_string(2 * n);
    if (!(fb >= 10 && fb <= 24)) tally.fail("beta " + span + " factor " + fb.str(4));
    if (!(fp >= 5 && fp <= 12)) tally.fail("p " + span + " factor " + fp.str(4));
    d << "beta " << span << " x" << fb.str(4) << ", p x" << fp.str(4) << "; ";
  }
  d << "N=256 table " << static_cast<long>(secs) << " s at " << ctx.precision_bits << " bits";
  return tally.done(d.str());
}

Outcome equilibrium() {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const auto p = wp("0.5", "0.5");
  Tally tally;
  Real db[2], dF[2];
  int k = 0;
  for (long n : {100L, 400L}) {
    const auto eq = solve_endpoint(Real(n), p, ctx);
    db[k] = abs(eq.b2 - series_eval(SeriesKind::endpoint_b2, Real(n), p));
    dF[k] = abs(free_energy_numeric(eq, ctx) - series_eval(SeriesKind::free_energy_F, Real(n), p));
    tally.bound(abs(normalization_check(eq, ctx) - n), Real("1e-40"), "n=" + std::to_string(n) + " normalization");
    ++k;
  }
  const double log4 = std::log(4.0);
  const double sb = std::log((db[0] / db[1]).to_double()) / log4;
  const double sF = std::log((dF[0] / dF[1]).to_double()) / log4;
  if (!(sb >= 5.5 && sb <= 6.5)) tally.fail("b2 order " + std::to_string(sb));
  if (!(dF[0] <= Real("1e-3"))) tally.fail("F at n=100 off by " + dF[0].str(4));
  if (!(sF >= 2 && sF <= 3)) tally.fail("F order " + std::to_string(sF));
  std::ostringstream d;
  d << "b2 order " << sb << ", |F - series| at 100 = " << dF[0].str(3) << ", F order " << sF
    << ", mass error " << tally.worst.str(3);
  return tally.done(d.str());
}

// ln G(N+1) summed directly, less its large-N expansion.
Real zeta_prime_oracle() {
  WorkingPrecision guard(256);
  const long N = 2000;
  Real lnG(0), lnfact(0);
  for (long k = 1; k <= N; ++k) {
    lnG += lnfact;
    lnfact += log(Real(k));
  }
  const Real n(N);
  const Real n2 = n * n;
  return lnG - (n2 / 2 * log(n) - 3 * n2 / 4 + n / 2 * log(2 * pi()) - log(n) / 12) + 1 / (240 * n2) -
         1 / (1008 * n2 * n2);
}

Outcome constant_fit() {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const auto grid = default_fit_grid(120);
  Tally tally;
  const FitResult g = fit_constants(Real(0), Real("0.5"), grid, ctx);
  const Real d1 = abs(g.c1 - log(2 * pi()));
  const Real d0 = abs(g.c0 - zeta_prime_oracle());
  if (!(d1 <= Real("1e-6"))) tally.fail("c1 off ln 2pi by " + d1.str(3));
  if (!(d0 <= Real("1e-3"))) tally.fail("c0 off zeta'(-1) by " + d0.str(3));
  const FitResult a = fit_constants(Real("0.5"), Real("0.4"), grid, ctx);
  const FitResult b = fit_constants(Real("0.5"), Real("0.8"), grid, ctx);
  const Real s1 = abs(a.c1 - b.c1);
  const Real s0 = abs(a.c0 - b.c0);
  if (!(s1 <= Real("1e-3") && s0 <= Real("1e-3"))) tally.fail("t=0.4 vs 0.8 differ by " + max(s1, s0).str(3));
  return tally.done("lambda=0: c1 " + d1.str(2) + ", c0 " + d0.str(2) + " off; lambda=0.5 t spread c1 " + s1.str(2) +
                    ", c0 " + s0.str(2) + " (n " + std::to_string(grid.front()) + ".." +
                    std::to_string(grid.back()) + ")");
}

Outcome bridge() {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  Tally tally;
  std::map<std::string, Real> worst;
  for (const auto& p : {wp("0.5", "0.7"), wp("0.8", "-0.4"), wp("0.5", "0")}) {
    for (const auto& r : check_weight_split(10, p, ctx)) {
      if (!r.pass) tally.fail(label(p) + " " + r.check_id + " = " + r.residual.str(3));
      if (r.status == CheckStatus::degenerate) continue;
      const std::string group = r.check_id.substr(0, 7);
      worst[group] = worst.count(group) ? max(worst[group], r.residual) : r.residual;
    }
  }
  const Real norms = max(max(worst["split_h"], worst["split_D"]), worst["split_p"]);
  if (!(norms <= Real("1e-100"))) tally.fail("norm relations " + norms.str(3));
  if (!(worst["split_P"] <= Real("1e-80"))) tally.fail("polynomial split " + worst["split_P"].str(3));
  if (!(worst["split_R"] <= Real("1e-60"))) tally.fail("R identification " + worst["split_R"].str(3));
  return tally.done("n <= 10: h/D/p " + norms.str(3) + ", P " + worst["split_P"].str(3) + ", R " +
                    worst["split_R"].str(3));
}

Outcome determinism() {
  const std::string args = "verify --t 0.5 --lambda 0.7 --nmax 5 --format json";
  int s1 = 0, s2 = 0;
  const std::string a = run_cli(args, s1);
  const std::string b = run_cli(args, s2);
  Tally tally;
  if (s1 != 0 || s2 != 0) tally.fail("exit status " + std::to_string(s1) + "/" + std::to_string(s2));
  if (a.empty()) tally.fail("empty output");
  if (a != b) tally.fail("outputs differ");
  return tally.done("two verify runs, " + std::to_string(a.size()) + " bytes each, identical");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"moment route agreement", moment_routes},
      {"ladder identities", ladder},
      {"difference equations", difference},
      {"t-evolution suite", t_evolution},
      {"Painleve V and sigma form", painleve},
      {"polynomial ODE", polynomial_ode},
      {"lambda=0 closed forms", closed_forms},
      {"asymptotic remainder scaling", remainder_scaling},
      {"equilibrium", equilibrium},
      {"constant fitting", constant_fit},
      {"Laguerre bridge", bridge},
      {"determinism", determinism},
  };
  std::set<long> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stol(argv[i]));

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const long id = static_cast<long>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": " << o.detail << " ("
              << static_cast<long>(secs) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
