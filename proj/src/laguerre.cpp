#include "pgw/laguerre.hpp"

#include "pgw/errors.hpp"
#include "pgw/linalg.hpp"
#include "pgw/moments.hpp"
#include "pgw/quadrature.hpp"

namespace pgw {

namespace {

size_t at(long i) { return static_cast<size_t>(i); }

Real relative_change(const Real& a, const Real& b) {
  if (b.is_zero()) return abs(a);
  return abs(a - b) / abs(b);
}

}  // namespace

LaguerreTable build_laguerre_table(long N, const Real& alpha, const Real& ttilde, const Real& lambda,
                                   const NumericContext& ctx) {
  if (N < 0) throw DomainError("build_laguerre_table requires N >= 0");
  if (!(alpha > -1)) throw DomainError("Laguerre weight requires alpha > -1");
  if (!(ttilde > 0)) throw DomainError("Laguerre weight requires ttilde > 0");
  ContextScope scope(ctx);
  const auto nu = laguerre_moment_table(2 * N + 3, alpha, ttilde, lambda, ctx);
  const LdlFactor f = ldl_hankel(nu, N + 2);

  LaguerreTable tb;
  tb.alpha = alpha;
  tb.ttilde = ttilde;
  tb.lambda = lambda;
  tb.N = N;
  tb.precision_bits = ctx.precision_bits;
  tb.ht.assign(f.pivots.begin(), f.pivots.begin() + N + 1);

  tb.Dt.assign(at(N + 2), Real(1));
  for (long n = 1; n <= N + 1; ++n) tb.Dt[at(n)] = tb.Dt[at(n - 1)] * f.pivots[at(n - 1)];

  // row n of L^{-1} holds the coefficients of P~_n
  tb.pt.assign(at(N + 2), Real(0));
  for (long n = 1; n <= N + 1; ++n) tb.pt[at(n)] = -f.lower[at(n)][at(n - 1)];

  tb.alpha_t.resize(at(N + 1));
  tb.beta_t.assign(at(N + 1), Real(0));
  for (long n = 0; n <= N; ++n) {
    tb.alpha_t[at(n)] = tb.pt[at(n)] - tb.pt[at(n + 1)];
    if (n > 0) tb.beta_t[at(n)] = tb.ht[at(n)] / tb.ht[at(n - 1)];
  }
  return tb;
}

Real eval_laguerre_polynomial(long n, const Real& x, const LaguerreTable& tb) {
  if (n < 0 || n > tb.N + 1) throw DomainError("eval_laguerre_polynomial: degree out of table range");
  WorkingPrecision wp(tb.precision_bits);
  Real prev(1);
  if (n == 0) return prev;
  Real cur = x - tb.alpha_t[0];
  for (long k = 1; k < n; ++k) {
    Real next = (x - tb.alpha_t[at(k)]) * cur - tb.beta_t[at(k)] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Real laguerre_aux_R(long n, const LaguerreTable& tb, const NumericContext& ctx) {
  if (n < 0 || n > tb.N) throw DomainError("laguerre_aux_R: degree out of table range");
  ContextScope scope(ctx);
  if (tb.lambda.is_zero()) return Real(0);
  const Real integral = integrate(
      [&](const Real& x) {
        const Real p = eval_laguerre_polynomial(n, x, tb);
        return square(p) * exp(tb.alpha * log(x) - x + (tb.lambda - 1) * log(x + tb.ttilde));
      },
      Domain::half_line(Real(0)), ctx);
  return tb.lambda * integral / tb.ht[at(n)];
}

Real certify_laguerre_table(const LaguerreTable& tb, const NumericContext& ctx, long extra_bits) {
  const NumericContext wide = NumericContext::with_precision(ctx.precision_bits + extra_bits);
  const LaguerreTable ref = build_laguerre_table(tb.N, tb.alpha, tb.ttilde, tb.lambda, wide);
  WorkingPrecision wp(wide.precision_bits);
  Real worst(0);
  for (size_t i = 0; i < tb.Dt.size(); ++i) worst = max(worst, relative_change(tb.Dt[i], ref.Dt[i]));
  for (size_t i = 0; i < tb.ht.size(); ++i) worst = max(worst, relative_change(tb.ht[i], ref.ht[i]));
  for (size_t i = 0; i < tb.pt.size(); ++i) worst = max(worst, relative_change(tb.pt[i], ref.pt[i]));
  return worst;
}

std::vector<ResidualReport> check_weight_split(long n, const WeightParams& params, const NumericContext& ctx,
                                               const BridgeTolerances& tol) {
  if (n < 0) throw DomainError("check_weight_split requires n >= 0");
  params.validate();
  ctx.validate();
  ContextScope scope(ctx);
  const Real& t = params.t;
  const Real& lambda = params.lambda;
  const Real s = 1 / t;

  const OrthoTable herm = build_ortho_table(2 * n + 2, params, ctx);
  const LaguerreTable even = build_laguerre_table(n, Real(-1) / 2, s, lambda, ctx);
  const LaguerreTable odd = build_laguerre_table(n, Real(1) / 2, s, lambda, ctx);
  const Real log_t = log(t);
  const Real t_lambda = exp(lambda * log_t);
  const bool zero = lambda.is_zero();

  ReportBuilder h_even("split_h_even", params, tol.norms), h_odd("split_h_odd", params, tol.norms);
  ReportBuilder d_even("split_D_even", params, tol.norms), d_odd("split_D_odd", params, tol.norms);
  ReportBuilder p_even("split_p_even", params, tol.norms), p_odd("split_p_odd", params, tol.norms);
  ReportBuilder P_even("split_P_even", params, tol.polynomials), P_odd("split_P_odd", params, tol.polynomials);
  ReportBuilder R_even("split_R_even", params, tol.aux, zero), R_odd("split_R_odd", params, tol.aux, zero);

  const auto samples = default_split_samples();
  for (long k = 0; k <= n; ++k) {
    h_even.add(k, {even.ht[at(k)] * t_lambda, -herm.h[at(2 * k)]});
    h_odd.add(k, {odd.ht[at(k)] * t_lambda, -herm.h[at(2 * k + 1)]});
    d_even.add(k, {exp(2 * k * lambda * log_t) * even.Dt[at(k)] * odd.Dt[at(k)], -herm.D[at(2 * k)]});
    d_odd.add(k, {exp((2 * k + 1) * lambda * log_t) * even.Dt[at(k + 1)] * odd.Dt[at(k)], -herm.D[at(2 * k + 1)]});
    p_even.add(k, {even.pt[at(k)], -herm.p[at(2 * k)]});
    p_odd.add(k, {odd.pt[at(k)], -herm.p[at(2 * k + 1)]});
    for (const auto& x : samples) {
      const Real y = sqrt(x);
      P_even.add(k, {eval_laguerre_polynomial(k, x, even), -eval_polynomial(2 * k, y, herm).value});
      P_odd.add(k, {eval_laguerre_polynomial(k, x, odd), -eval_polynomial(2 * k + 1, y, herm).value / y});
    }
    R_even.add(k, {2 * laguerre_aux_R(k, even, ctx), -herm.R[at(2 * k)]});
    R_odd.add(k, {2 * laguerre_aux_R(k, odd, ctx), -herm.R[at(2 * k + 1)]});
  }
  return {h_even.finish(), h_odd.finish(), d_even.finish(), d_odd.finish(), p_even.finish(),
          p_odd.finish(),  P_even.finish(), P_odd.finish(), R_even.finish(), R_odd.finish()};
}

std::vector<Real> default_split_samples() { return {Real("0.25"), Real(1), Real(4)}; }

}  // namespace pgw
