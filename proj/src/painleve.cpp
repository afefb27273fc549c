#include "pgw/painleve.hpp"

#include <set>
#include <utility>

#include "pgw/errors.hpp"
#include "pgw/finite_difference.hpp"
#include "pgw/special.hpp"

namespace pgw {

namespace {

size_t at(long i) { return static_cast<size_t>(i); }

using Quantity = std::function<Real(const OrthoTable&)>;
using TermSet = std::vector<std::pair<std::string, std::vector<Real>>>;

// Checks whose every term vanishes identically when lambda = 0.
bool degenerate_at_zero(const std::string& id) {
  static const std::set<std::string> ids{"re1", "re3", "re4", "beta", "pnd", "dpiv", "p1", "p2", "btd1", "iden",
                                         "ri1", "ri2", "hd",  "rh",  "Rnd",  "rnd", "btd", "jmo"};
  return ids.count(id) != 0;
}

struct Jet {
  Real v;
  Real d1;
  Real d2;
};

Jet jet(TableFamily& family, const Real& x0, const Quantity& q, const NumericContext& step_ctx, bool second) {
  RealFunction f = [&](const Real& x) { return q(family.at(x)); };
  Jet j;
  j.v = q(family.at(x0));
  j.d1 = fd_derivative(f, x0, 1, step_ctx);
  j.d2 = second ? fd_derivative(f, x0, 2, step_ctx) : Real(0);
  return j;
}

// Evaluates the suite at the context step and at half of it; the main-step
// residual decides the verdict.
std::vector<ResidualReport> run_fd_suite(long n, const WeightParams& params, const Real& tolerance,
                                         const NumericContext& ctx,
                                         const std::function<TermSet(const NumericContext&)>& terms_at) {
  const TermSet main = terms_at(ctx);
  const TermSet half = terms_at(ctx.with_fd_step(ctx.fd_step / 2));
  const bool lambda_zero = params.lambda.is_zero();
  std::vector<ResidualReport> out;
  for (size_t i = 0; i < main.size(); ++i) {
    const bool degenerate = lambda_zero && degenerate_at_zero(main[i].first);
    ReportBuilder b(main[i].first, params, tolerance, degenerate);
    b.add(n, main[i].second);
    Real scale;
    b.set_half_step(term_sum_residual(half[i].second, scale, degenerate));
    out.push_back(b.finish());
  }
  return out;
}

std::vector<ResidualReport> collect(std::vector<ReportBuilder>& builders) {
  std::vector<ResidualReport> out;
  for (const auto& b : builders) out.push_back(b.finish());
  return out;
}

Real kummer_beta1(const WeightParams& params, const NumericContext& ctx) {
  const Real z = 1 / params.t;
  return kummer_u(Real(3) / 2, Real(5) / 2 + params.lambda, z, ctx) /
         (2 * params.t * kummer_u(Real(1) / 2, Real(3) / 2 + params.lambda, z, ctx));
}

}  // namespace

VerifyTolerances VerifyTolerances::uniform(const Real& tol) {
  VerifyTolerances v;
  v.ladder = v.difference = v.initial = v.evolution = v.painleve = v.ode = tol;
  return v;
}

TableFamily::TableFamily(long N, const Real& lambda, Variable var, const NumericContext& ctx)
    : N_(N), lambda_(lambda), var_(var), ctx_(ctx) {}

const OrthoTable& TableFamily::at(const Real& x) {
  const std::string key = x.str();
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  ContextScope scope(ctx_);
  const Real t = var_ == Variable::t ? x : 1 / x;
  auto [pos, inserted] = tables_.emplace(key, build_ortho_table(N_, WeightParams(t, lambda_), ctx_));
  return pos->second;
}

std::vector<ResidualReport> check_ladder_identities(const OrthoTable& tb, const VerifyTolerances& tol) {
  if (tb.N < 3) throw DomainError("ladder identities need a table with N >= 3");
  WorkingPrecision wp(tb.precision_bits);
  const Real& t = tb.params.t;
  const Real& lambda = tb.params.lambda;
  const bool zero = lambda.is_zero();

  std::vector<ReportBuilder> b;
  for (const char* id : {"re1", "re2", "re3", "re4", "iden"}) {
    b.emplace_back(id, tb.params, tol.ladder, zero && degenerate_at_zero(id));
  }
  for (long n = 1; n <= tb.N - 1; ++n) {
    const Real& beta = tb.beta[at(n)];
    const Real& beta_m = tb.beta[at(n - 1)];
    const Real& r = tb.r[at(n)];
    const Real& r_p = tb.r[at(n + 1)];
    const Real& R = tb.R[at(n)];
    const Real& R_m = tb.R[at(n - 1)];
    const Real& H = tb.H[at(n)];
    const Real& p = tb.p[at(n)];

    b[0].add(n, {R, -2 * lambda * t, t * r, t * r_p});
    b[1].add(n, {beta, -Real(n) / 2, -r / 2});
    b[2].add(n, {2 * lambda * t * r, -t * square(r), -beta * R * R_m});
    // -Σ_{j<n} R_j is H_n
    b[3].add(n, {t * square(r), -2 * (1 + lambda * t) * r, H, 2 * beta * R, 2 * beta * R_m});
    b[4].add(n, {beta * R, -r, -2 * t * p, -2 * t * beta * beta_m});
  }
  return collect(b);
}

std::vector<ResidualReport> check_difference_equations(const OrthoTable& tb, const NumericContext& ctx,
                                                       const VerifyTolerances& tol) {
  if (tb.N < 3) throw DomainError("difference equations need a table with N >= 3");
  ContextScope scope(ctx);
  const Real& t = tb.params.t;
  const Real& lambda = tb.params.lambda;
  const bool zero = lambda.is_zero();

  ReportBuilder beq("beta", tb.params, tol.difference, zero);
  ReportBuilder peq("pnd", tb.params, tol.difference, zero);
  ReportBuilder dpiv("dpiv", tb.params, tol.difference, zero);
  for (long n = 1; n <= tb.N - 1; ++n) {
    const Real& beta = tb.beta[at(n)];
    const Real& beta_m = tb.beta[at(n - 1)];
    const Real& beta_p = tb.beta[at(n + 1)];
    beq.add(n, {(n - 2 * beta) * (n + 2 * lambda - 2 * beta),
                t * beta * (2 * lambda + (2 * n + 1) - 2 * beta - 2 * beta_p) *
                    (2 * lambda + (2 * n - 1) - 2 * beta_m - 2 * beta)});

    const Real& p = tb.p[at(n)];
    const Real& p_m = tb.p[at(n - 1)];
    const Real& p_p = tb.p[at(n + 1)];
    const Real first = (n - 2 * p + 2 * p_p) * (n + 2 * lambda - 2 * p + 2 * p_p);
    const Real factor = 2 * lambda + (2 * n - 1) - 2 * p_m + 2 * p_p;
    const Real bracket = n - 2 * (t + 1) * p + 2 * p_p - 2 * t * (p_m - p) * (p - p_p);
    peq.add(n, {first, -factor * bracket});

    // (x_n + x_{n-1})(x_n + x_{n+1}) t (x_n + n + lambda) = -2 (x_n^2 - lambda^2)
    const Real x = 2 * beta - n - lambda;
    const Real x_m = 2 * beta_m - (n - 1) - lambda;
    const Real x_p = 2 * beta_p - (n + 1) - lambda;
    dpiv.add(n, {t * (x + n + lambda) * (x + x_m) * (x + x_p), 2 * square(x), -2 * square(lambda)});
  }

  const Real beta1 = kummer_beta1(tb.params, ctx);
  ReportBuilder ib("init_beta1", tb.params, tol.initial);
  ib.add_value(1, abs(tb.beta[1] - beta1) / abs(beta1), Real(1));
  ReportBuilder ip("init_p2", tb.params, tol.initial);
  ip.add_value(2, max(abs(tb.p[2] + beta1) / abs(beta1), abs(tb.p[1])), Real(1));

  return {beq.finish(), peq.finish(), dpiv.finish(), ib.finish(), ip.finish()};
}

std::vector<ResidualReport> check_t_evolution(long n, const WeightParams& params, const NumericContext& ctx,
                                              const VerifyTolerances& tol) {
  if (n < 1) throw DomainError("t-evolution checks need n >= 1");
  params.validate();
  ctx.validate();
  ContextScope scope(ctx);
  TableFamily family(n + 2, params.lambda, TableFamily::Variable::t, ctx);
  const Real& t = params.t;
  const Real& lambda = params.lambda;

  auto terms_at = [&](const NumericContext& step) -> TermSet {
    const OrthoTable& tb = family.at(t);
    const Jet lnh = jet(family, t, [n](const OrthoTable& x) { return log(x.h[at(n)]); }, step, false);
    const Jet p = jet(family, t, [n](const OrthoTable& x) { return x.p[at(n)]; }, step, false);
    const Jet beta = jet(family, t, [n](const OrthoTable& x) { return x.beta[at(n)]; }, step, false);
    const Jet r = jet(family, t, [n](const OrthoTable& x) { return x.r[at(n)]; }, step, false);
    const Jet R = jet(family, t, [n](const OrthoTable& x) { return x.R[at(n)]; }, step, false);
    const Jet lnD = jet(family, t, [n](const OrthoTable& x) { return x.logD[at(n)]; }, step, false);
    const Real& R_m = tb.R[at(n - 1)];
    const Real& beta_m = tb.beta[at(n - 1)];
    const Real& H = tb.H[at(n)];
    const Real t2 = square(t);

    TermSet s;
    s.push_back({"p1", {2 * t2 * lnh.d1, -2 * lambda * t, R.v}});
    s.push_back({"p2", {2 * t2 * p.d1, -r.v, beta.v * R.v}});
    s.push_back({"dp1", {2 * t * p.d1, 2 * p.v, 2 * beta.v * beta_m}});
    s.push_back({"btd1", {2 * t2 * beta.d1, -beta.v * R_m, beta.v * R.v}});
    // multiplied through by R_n
    s.push_back({"ri1", {t2 * r.d1 * R.v, -t * r.v * (2 * lambda - r.v), (n + r.v) * square(R.v) / 2}});
    s.push_back({"ri2",
                 {2 * t2 * R.d1, -square(R.v), -(2 * t * r.v - 2 * lambda * t + t - 2) * R.v, 4 * t * r.v,
                  -4 * lambda * t}});
    s.push_back({"hd", {H, -2 * t2 * lnD.d1, 2 * n * lambda * t}});
    return s;
  };
  return run_fd_suite(n, params, tol.evolution, ctx, terms_at);
}

std::vector<ResidualReport> check_painleve_v(long n, const WeightParams& params, const NumericContext& ctx,
                                             const VerifyTolerances& tol) {
  if (n < 1) throw DomainError("Painleve V checks need n >= 1");
  params.validate();
  ctx.validate();
  if (params.lambda.is_zero()) {
    throw DegenerateTransformError("degenerate (lambda=0): R_n vanishes identically, W_n = R_n/(R_n-2) is 0");
  }
  ContextScope scope(ctx);
  const Real& t = params.t;
  const Real& lambda = params.lambda;
  const Real s0 = 1 / t;
  TableFamily t_family(n + 2, lambda, TableFamily::Variable::t, ctx);
  TableFamily s_family(n + 2, lambda, TableFamily::Variable::s, ctx);

  {
    const Real R = t_family.at(t).R[at(n)];
    const Real threshold("1e-30");
    if (abs(R) < threshold || abs(R - 2) < threshold) {
      throw DegenerateTransformError("R_n is too close to 0 or 2 for the W_n transform");
    }
  }

  auto terms_at = [&](const NumericContext& step) -> TermSet {
    const Jet R = jet(t_family, t, [n](const OrthoTable& x) { return x.R[at(n)]; }, step, true);
    const Jet W = jet(
        s_family, s0,
        [n](const OrthoTable& x) {
          const Real& r = x.R[at(n)];
          return r / (r - 2);
        },
        step, true);

    const Real c = (2 * n + 1) + 2 * lambda;
    const Real t2 = square(t), t3 = t2 * t, t4 = t3 * t;
    const Real R2 = square(R.v), R3 = R2 * R.v, R4 = R3 * R.v, R5 = R4 * R.v;
    const Real lam2 = square(lambda);

    TermSet s;
    s.push_back({"Rnd",
                 {4 * t4 * R.v * (R.v - 2) * R.d2, -4 * t4 * (R.v - 1) * square(R.d1),
                  4 * t3 * R.v * (R.v - 2) * R.d1, -R5, (c * t + 5) * R4, -4 * (c * t + 2) * R3,
                  ((1 - 4 * lam2) * t2 + 4 * c * t + 4) * R2, 16 * lam2 * t2 * (R.v - 1)}});

    const Real mu1 = Real(1) / 8;
    const Real mu2 = -lam2 / 2;
    const Real mu3 = n + lambda + Real(1) / 2;
    const Real mu4 = -Real(1) / 2;
    const Real& w = W.v;
    const Real wm1 = w - 1;
    const Real s2 = square(s0);
    s.push_back({"pv",
                 {W.d2, -(3 * w - 1) * square(W.d1) / (2 * w * wm1), W.d1 / s0, -square(wm1) / s2 * mu1 * w,
                  -square(wm1) / s2 * mu2 / w, -mu3 * w / s0, -mu4 * w * (w + 1) / wm1}});
    return s;
  };

  auto reports = run_fd_suite(n, params, tol.painleve, ctx, terms_at);
  // report pv first
  std::swap(reports[0], reports[1]);
  return reports;
}

std::vector<ResidualReport> check_sigma_form(long n, const WeightParams& params, const NumericContext& ctx,
                                             const VerifyTolerances& tol) {
  if (n < 2) throw DomainError("sigma-form checks need n >= 2");
  params.validate();
  ctx.validate();
  ContextScope scope(ctx);
  const Real& t = params.t;
  const Real& lambda = params.lambda;
  const Real s0 = 1 / t;
  TableFamily t_family(n + 2, lambda, TableFamily::Variable::t, ctx);
  TableFamily s_family(n + 2, lambda, TableFamily::Variable::s, ctx);
  const Real shift = Real(n * (n - 1)) / 4;

  auto terms_at = [&](const NumericContext& step) -> TermSet {
    const Jet sig = jet(
        s_family, s0, [n, &shift](const OrthoTable& x) { return x.p[at(n)] + shift; }, step, true);
    const Jet p = jet(t_family, t, [n](const OrthoTable& x) { return x.p[at(n)]; }, step, true);
    const Jet r = jet(t_family, t, [n](const OrthoTable& x) { return x.r[at(n)]; }, step, true);
    const Jet b = jet(t_family, t, [n](const OrthoTable& x) { return x.beta[at(n)]; }, step, true);
    const Jet H = jet(t_family, t, [n](const OrthoTable& x) { return x.H[at(n)]; }, step, true);

    const Real t2 = square(t), t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t, t7 = t6 * t;
    const Real lam2 = square(lambda);
    TermSet s;

    {
      const Real nu_sum = lambda - n + Real(1) / 2;
      const Real& d = sig.d1;
      const Real bracket = sig.v - s0 * d + 2 * square(d) + nu_sum * d;
      const Real prod = d * (d - Real(n) / 2) * (d + lambda) * (d - Real(n - 1) / 2);
      s.push_back({"jmo", {square(s0 * sig.d2), -square(bracket), 4 * prod}});
    }
    {
      const Real& P = p.v;
      const Real& P1 = p.d1;
      const Real& P2 = p.d2;
      const Real nn1 = Real(n * (n - 1));
      s.push_back(
          {"sod",
           {16 * t6 * square(P2), 64 * t5 * P1 * P2, -64 * t5 * pow(P1, 3),
            -4 * t2 * square(P1) *
                (16 * t2 * P + (2 * n + 3 + 2 * lambda) * (2 * n - 5 + 2 * lambda) * t2 +
                 4 * t * (2 * n - 1 - 2 * lambda) + 4),
            -4 * t * P1 * (4 * ((2 * n - 1 - 2 * lambda) * t + 2) * P + nn1 * ((2 * n - 1 + 2 * lambda) * t + 2)),
            -16 * square(P), -8 * nn1 * P, -square(nn1)}});
    }
    {
      const Real& x = r.v;
      const Real& x1 = r.d1;
      const Real& x2 = r.d2;
      const Real k = 2 * lambda * t + 3 * t + 2 - 2 * t * x;
      const Real cubic = x * (x + n) * (x - 2 * lambda);
      const Real lhs = 2 * t5 * x1 * x2 + t3 * k * square(x1) -
                       2 * t2 * (3 * square(x) + 2 * (n - 2 * lambda) * x - 2 * n * lambda) * x1 +
                       4 * cubic * (t * x - lambda * t - 1);
      const Real rhs = t * (t3 * square(x1) - 2 * cubic) *
                       square(2 * t3 * x2 + t * k * x1 - 6 * square(x) - 4 * (n - 2 * lambda) * x + 4 * n * lambda);
      s.push_back({"rnd", {square(lhs), -rhs}});
    }
    {
      const Real& B = b.v;
      const Real& B1 = b.d1;
      const Real& B2 = b.d2;
      const Real k = (4 * B - 2 * n - 3 - 2 * lambda) * t - 2;
      const Real quad = 12 * square(B) - 8 * (n + lambda) * B + n * (n + 2 * lambda);
      const Real cubic = B * (2 * B - n) * (2 * B - n - 2 * lambda);
      const Real lhs = 2 * t5 * B1 * B2 - t3 * k * square(B1) - t2 * quad * B1 +
                       2 * cubic * ((2 * B - n - lambda) * t - 1);
      const Real rhs = t * (t3 * square(B1) - cubic) * square(2 * t3 * B2 - t * k * B1 - quad);
      s.push_back({"btd", {square(lhs), -rhs}});
    }
    {
      const Real& h = H.v;
      const Real& h1 = H.d1;
      const Real& h2 = H.d2;
      const Real lt1 = lambda * t - 1;
      const Real g = 2 * n * lt1 + t;
      const Real lhs =
          4 * t7 * square(h2) - 4 * t4 * (t2 * h1 - t * h + 2 * lambda * t - 2) * h2 -
          t3 * (20 * t * h + (4 * lam2 - 1) * t2 + 8 * (4 * n - lambda) * t + 4) * square(h1) + 8 * t5 * pow(h1, 3) +
          2 * t2 *
              (8 * t * square(h) + ((4 * lam2 - 1) * t2 + 16 * (n - lambda) * t + 12) * h +
               2 * (lambda * t - 3) * (4 * n * lt1 + t)) *
              h1 -
          4 * t2 * pow(h, 3) + t * ((1 - 4 * lam2) * t2 - 8 * (n - 2 * lambda) * t - 12) * square(h) -
          4 *
              (lambda * t3 * (2 * n * lambda - 2 * lam2 + 1) - 2 * t2 * (4 * n * lambda - 3 * lam2 + 1) +
               6 * t * (n - lambda) + 2) *
              h +
          8 * square(lt1) * g;
      const Real rhs = 16 * (t * h - 2 * t2 * h1 + square(lt1)) *
                       square(2 * t4 * h2 - 2 * t * square(h) + t2 * (4 * h - t + 8 * n) * h1 +
                              ((1 - 2 * lam2) * t2 - 4 * (n - lambda) * t - 2) * h - 2 * lt1 * g);
      s.push_back({"hnd", {square(lhs), -rhs}});
    }
    s.push_back({"rh", {t * square(r.v), 2 * (1 - lambda * t) * r.v, 2 * t * H.d1, -H.v}});
    return s;
  };
  return run_fd_suite(n, params, tol.painleve, ctx, terms_at);
}

OdeCoefficients ode_coefficients(long n, const Real& z, const OrthoTable& tb) {
  if (n < 0 || n + 1 > tb.N) throw DomainError("polynomial ODE needs beta_{n+1} inside the table");
  WorkingPrecision wp(tb.precision_bits);
  const Real& t = tb.params.t;
  const Real& lambda = tb.params.lambda;
  const Real& beta = tb.beta[at(n)];
  const Real& beta_p = tb.beta[at(n + 1)];
  const Real q = 1 + t * square(z);
  const Real Rn = t * (2 * lambda + (2 * n + 1) - 2 * beta - 2 * beta_p);
  const Real rn = 2 * beta - n;

  OdeCoefficients c;
  c.A = 2 - Rn / q;
  c.dA = 2 * t * z * Rn / square(q);
  c.B = t * z * rn / q;
  c.dB = t * rn * (1 - t * square(z)) / square(q);
  c.v1 = 2 * z - 2 * lambda * t * z / q;
  // the middle fraction is 0/0 at lambda = 0, where its limit is 0
  Real middle(0);
  if (!lambda.is_zero()) {
    middle = 2 * (n - 2 * beta) * (n + 2 * lambda - 2 * beta) /
             ((2 * lambda + (2 * n + 1) - 2 * beta - 2 * beta_p) * q);
  }
  c.sumA = 2 * n + middle -
           (n * n * t + 2 * n * (1 + lambda * t) + 2 * (t - 2) * beta - 4 * t * beta * beta_p) / q;
  return c;
}

ResidualReport check_polynomial_ode(long n, const std::vector<Real>& z_samples, const OrthoTable& tb,
                                    const VerifyTolerances& tol) {
  WorkingPrecision wp(tb.precision_bits);
  ReportBuilder b("ode", tb.params, tol.ode);
  for (const auto& z : z_samples) {
    const OdeCoefficients c = ode_coefficients(n, z, tb);
    if (abs(c.A) < Real("1e-40")) throw DomainError("A_n vanishes at a polynomial ODE sample point");
    const PolyValue P = eval_polynomial(n, z, tb);
    const Real ratio = c.dA / c.A;
    Real scale;
    const Real res = term_sum_residual(
        {P.d2, -c.v1 * P.d1, -ratio * P.d1, c.dB * P.value, -c.B * ratio * P.value, c.sumA * P.value}, scale);
    b.add_value(n, res, scale);
  }
  return b.finish();
}

std::vector<Real> default_ode_samples() { return {Real("0.3"), Real("1.1"), Real("2.7")}; }

}  // namespace pgw
