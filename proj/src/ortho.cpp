#include "pgw/ortho.hpp"

#include <functional>
#include <string>

#include "pgw/errors.hpp"
#include "pgw/linalg.hpp"
#include "pgw/quadrature.hpp"

namespace pgw {

namespace {

size_t at(long i) { return static_cast<size_t>(i); }

Real relative_change(const Real& a, const Real& b) {
  if (b.is_zero()) return abs(a);
  return abs(a - b) / abs(b);
}

void track_max(Real& acc, const std::vector<Real>& a, const std::vector<Real>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) acc = max(acc, relative_change(a[i], b[i]));
}

Real determinant(std::vector<std::vector<Real>> m) {
  const size_t n = m.size();
  if (n == 0) return Real(1);
  if (n == 1) return m[0][0];
  Real det(0);
  for (size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Real>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Real> row;
      for (size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    Real term = m[0][col] * determinant(std::move(minor));
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace

void derive_from_norms(OrthoTable& tb) {
  const long N = tb.N;
  const Real& t = tb.params.t;
  const Real& lambda = tb.params.lambda;

  tb.beta.assign(at(N + 2), Real(0));
  for (long n = 1; n <= N + 1; ++n) tb.beta[at(n)] = tb.h[at(n)] / tb.h[at(n - 1)];

  tb.p.assign(at(N + 3), Real(0));
  for (long n = 1; n <= N + 2; ++n) tb.p[at(n)] = tb.p[at(n - 1)] - tb.beta[at(n - 1)];

  tb.r.resize(at(N + 2));
  for (long n = 0; n <= N + 1; ++n) tb.r[at(n)] = 2 * tb.beta[at(n)] - n;

  tb.R.resize(at(N + 1));
  for (long n = 0; n <= N; ++n) {
    tb.R[at(n)] = t * (2 * lambda + (2 * n + 1) - 2 * tb.beta[at(n)] - 2 * tb.beta[at(n + 1)]);
  }

  tb.H.assign(at(N + 2), Real(0));
  for (long n = 1; n <= N + 1; ++n) tb.H[at(n)] = tb.H[at(n - 1)] - tb.R[at(n - 1)];

  tb.D.assign(at(N + 3), Real(1));
  tb.logD.assign(at(N + 3), Real(0));
  for (long n = 1; n <= N + 2; ++n) {
    tb.D[at(n)] = tb.D[at(n - 1)] * tb.h[at(n - 1)];
    tb.logD[at(n)] = tb.logD[at(n - 1)] + log(tb.h[at(n - 1)]);
  }
}

OrthoTable build_ortho_table(long N, const WeightParams& params, const NumericContext& ctx, OrthoRoute route) {
  if (N < 1) throw DomainError("build_ortho_table requires N >= 1");
  params.validate();
  ContextScope scope(ctx);
  auto moments = moment_table_recurrence(N + 1, params, ctx);

  OrthoTable tb;
  tb.params = params;
  tb.N = N;
  tb.precision_bits = ctx.precision_bits;
  tb.h.resize(at(N + 2));

  if (route == OrthoRoute::full) {
    const LdlFactor f = ldl_hankel(moments->mu, N + 2);
    tb.h = f.pivots;
  } else {
    const long size_even = (N + 1) / 2 + 1;
    const long size_odd = N / 2 + 1;
    LdlFactor even, odd;
    try {
      even = ldl_hankel(moments->mu, size_even, 2, 0);
    } catch (const PrecisionError& e) {
      throw PrecisionError(e.what(), 2 * e.order());
    }
    try {
      odd = ldl_hankel(moments->mu, size_odd, 2, 2);
    } catch (const PrecisionError& e) {
      throw PrecisionError(e.what(), 2 * e.order() + 1);
    }
    for (long k = 0; k < size_even; ++k) tb.h[at(2 * k)] = even.pivots[at(k)];
    for (long k = 0; k < size_odd; ++k) tb.h[at(2 * k + 1)] = odd.pivots[at(k)];
  }

  derive_from_norms(tb);
  return tb;
}

PolyValue eval_polynomial(long n, const Real& z, const OrthoTable& table) {
  if (n < 0 || n > table.N + 1) throw DomainError("eval_polynomial: degree out of table range");
  WorkingPrecision wp(table.precision_bits);
  // (P, P', P'') for degrees k-1 and k
  Real p0(1), d0(0), s0(0);
  if (n == 0) return {p0, d0, s0};
  Real p1 = z, d1(1), s1(0);
  for (long k = 1; k < n; ++k) {
    const Real& b = table.beta[at(k)];
    Real p2 = z * p1 - b * p0;
    Real d2 = p1 + z * d1 - b * d0;
    Real s2 = 2 * d1 + z * s1 - b * s0;
    p0 = std::move(p1);
    d0 = std::move(d1);
    s0 = std::move(s1);
    p1 = std::move(p2);
    d1 = std::move(d2);
    s1 = std::move(s2);
  }
  return {p1, d1, s1};
}

AuxPair aux_integral(long n, const WeightParams& params, const NumericContext& ctx, const OrthoTable& table) {
  if (n < 0 || n > table.N) throw DomainError("aux_integral: degree out of table range");
  ContextScope scope(ctx);
  AuxPair out{Real(0), Real(0)};
  if (params.lambda.is_zero()) return out;
  const Real& t = params.t;
  const Real& lambda = params.lambda;

  // P_n and P_{n-1} together, by the recurrence
  auto pair_at = [&](const Real& y) {
    Real prev(1), cur = y;
    if (n == 0) return std::pair<Real, Real>(Real(1), Real(0));
    for (long k = 1; k < n; ++k) {
      Real next = y * cur - table.beta[at(k)] * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return std::pair<Real, Real>(cur, prev);
  };
  auto weight_over = [&](const Real& y) {
    const Real y2 = square(y);
    return exp(-y2 + (lambda - 1) * log1p(t * y2));
  };

  const Real big = integrate(
      [&](const Real& y) {
        auto [pn, pm] = pair_at(y);
        return square(pn) * weight_over(y);
      },
      Domain::real_line(), ctx);
  out.R = 2 * lambda * t * big / table.h[at(n)];
  if (n >= 1) {
    const Real small = integrate(
        [&](const Real& y) {
          auto [pn, pm] = pair_at(y);
          return y * pn * pm * weight_over(y);
        },
        Domain::real_line(), ctx);
    out.r = 2 * lambda * t * small / table.h[at(n - 1)];
  }
  return out;
}

Real hankel_det_direct(long n, const WeightParams& params, const NumericContext& ctx) {
  if (n < 0 || n > 8) throw DomainError("hankel_det_direct supports 0 <= n <= 8");
  ContextScope scope(ctx);
  std::vector<Real> mu;
  for (long j = 0; j <= 2 * n; ++j) mu.push_back(moment(j, params, ctx));
  std::vector<std::vector<Real>> m(at(n), std::vector<Real>(at(n)));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) m[at(i)][at(j)] = mu[at(i + j)];
  }
  return determinant(std::move(m));
}

Real certify_table(const OrthoTable& table, const NumericContext& ctx, long extra_bits) {
  NumericContext wide = NumericContext::with_precision(ctx.precision_bits + extra_bits);
  const OrthoTable ref = build_ortho_table(table.N, table.params, wide);
  WorkingPrecision wp(ctx.precision_bits + extra_bits);
  Real worst(0);
  track_max(worst, table.D, ref.D);
  track_max(worst, table.h, ref.h);
  track_max(worst, table.beta, ref.beta);
  track_max(worst, table.p, ref.p);
  track_max(worst, table.r, ref.r);
  track_max(worst, table.R, ref.R);
  track_max(worst, table.H, ref.H);
  return worst;
}

}  // namespace pgw
