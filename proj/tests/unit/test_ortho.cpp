#include "doctest.h"

#include "pgw/errors.hpp"
#include "pgw/ortho.hpp"
#include "pgw/special.hpp"

using namespace pgw;

namespace {

Real rel_err(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

size_t at(long i) { return static_cast<size_t>(i); }

}  // namespace

TEST_CASE("lambda = 0 reproduces the Hermite system") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const auto tb = build_ortho_table(30, WeightParams(Real("0.5"), Real(0)), ctx);
  const Real tol("1e-140");
  Real h = sqrt(pi());
  for (long n = 0; n <= 30; ++n) {
    CAPTURE(n);
    if (n > 0) h *= Real(n) / 2;
    CHECK(rel_err(tb.h[at(n)], h) <= tol);
    CHECK(abs(tb.beta[at(n)] - Real(n) / 2) <= tol);
    CHECK(abs(tb.p[at(n)] - (Real(n) / 4 - Real(n * n) / 4)) <= tol);
    CHECK(abs(tb.r[at(n)]) <= tol);
    CHECK(abs(tb.R[at(n)]) <= tol);
    CHECK(abs(tb.H[at(n)]) <= tol * n * n);
  }
}

TEST_CASE("beta_1 examples") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  // beta_1 = mu_2 / mu_0 = (2 + 3t) / (4 + 2t) = 1 at t = 2
  const auto tb = build_ortho_table(3, WeightParams(Real(2), Real(1)), ctx);
  CHECK(abs(tb.beta[1] - 1) <= Real("1e-110"));

  for (const char* ls : {"0.7", "-0.4"}) {
    const WeightParams p(Real("0.5"), Real(ls));
    const auto t2 = build_ortho_table(3, p, ctx);
    const Real z = 1 / p.t;
    const Real u_formula =
        kummer_u(Real(3) / 2, Real(5) / 2 + p.lambda, z, ctx) / (2 * p.t * kummer_u(Real(1) / 2, Real(3) / 2 + p.lambda, z, ctx));
    CHECK(rel_err(t2.beta[1], u_formula) <= Real("1e-110"));
  }
}

TEST_CASE("table invariants on a generic parameter point") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  for (const char* ls : {"0.7", "-0.4", "1.5"}) {
    const WeightParams p(Real("0.5"), Real(ls));
    const auto tb = build_ortho_table(30, p, ctx);
    const Real tol("1e-120");
    CHECK(tb.beta[0].is_zero());
    CHECK(tb.p[0].is_zero());
    CHECK(tb.p[1].is_zero());
    for (long n = 1; n <= 30; ++n) {
      CAPTURE(ls);
      CAPTURE(n);
      CHECK(tb.D[at(n)] > 0);
      CHECK(tb.h[at(n)] > 0);
      CHECK(rel_err(tb.D[at(n + 1)] / tb.D[at(n)], tb.h[at(n)]) <= tol);
      CHECK(rel_err(tb.D[at(n + 1)] * tb.D[at(n - 1)] / square(tb.D[at(n)]), tb.beta[at(n)]) <= tol);
      CHECK(abs(tb.p[at(n)] - tb.p[at(n + 1)] - tb.beta[at(n)]) <= tol * n);
      CHECK(abs(tb.r[at(n)] - (2 * tb.beta[at(n)] - n)) <= tol * n);
      // H_n = 2 t beta_n - 4 t p(n) - n t (n + 2 lambda)
      const Real p3 = 2 * p.t * tb.beta[at(n)] - 4 * p.t * tb.p[at(n)] - n * p.t * (n + 2 * p.lambda);
      CHECK(abs(tb.H[at(n)] - p3) <= tol * n * n);
      CHECK(abs(log(tb.D[at(n)]) - tb.logD[at(n)]) <= tol * abs(tb.logD[at(n)]) + tol);
    }
  }
}

TEST_CASE("split route agrees with the full LDL route") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  for (long N : {7L, 8L, 30L}) {
    const WeightParams p(Real("0.8"), Real("-0.4"));
    const auto full = build_ortho_table(N, p, ctx, OrthoRoute::full);
    const auto split = build_ortho_table(N, p, ctx, OrthoRoute::split);
    for (long n = 0; n <= N + 1; ++n) {
      CAPTURE(N);
      CAPTURE(n);
      CHECK(rel_err(split.h[at(n)], full.h[at(n)]) <= Real("1e-130"));
      CHECK(abs(split.p[at(n)] - full.p[at(n)]) <= Real("1e-125"));
    }
  }
}

TEST_CASE("rebuilding at 128 more bits changes nothing beyond 1e-100") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const auto tb = build_ortho_table(30, WeightParams(Real("0.25"), Real("1.5")), ctx);
  CHECK(certify_table(tb, ctx) <= Real("1e-100"));
}

TEST_CASE("polynomial evaluation") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const auto tb = build_ortho_table(6, WeightParams(Real("0.5"), Real("0.7")), ctx);
  const Real z("0.83");
  CHECK(eval_polynomial(0, z, tb).value == 1);
  CHECK(eval_polynomial(1, z, tb).value == z);
  CHECK(eval_polynomial(1, z, tb).d1 == 1);
  const auto p2 = eval_polynomial(2, z, tb);
  CHECK(abs(p2.value - (square(z) - tb.beta[1])) <= Real("1e-140"));
  CHECK(abs(p2.d1 - 2 * z) <= Real("1e-140"));
  CHECK(abs(p2.d2 - 2) <= Real("1e-140"));
  CHECK_THROWS_AS(eval_polynomial(9, z, tb), DomainError);

  // monic Hermite: He_3(x)/... with beta_n = n/2 gives x^3 - 3x/2
  const auto hermite = build_ortho_table(4, WeightParams(Real("0.5"), Real(0)), ctx);
  CHECK(abs(eval_polynomial(3, Real(1), hermite).value + Real(1) / 2) <= Real("1e-140"));
  const auto p3 = eval_polynomial(3, Real(2), hermite);
  CHECK(abs(p3.d1 - (3 * Real(4) - Real(3) / 2)) <= Real("1e-140"));
  CHECK(abs(p3.d2 - 12) <= Real("1e-140"));
}

TEST_CASE("auxiliary integrals match the identity-derived R_n and r_n") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  {
    const WeightParams p(Real("0.5"), Real(0));
    const auto tb = build_ortho_table(4, p, ctx);
    const auto a = aux_integral(3, p, ctx, tb);
    CHECK(a.R.is_zero());
    CHECK(a.r.is_zero());
  }
  {
    const WeightParams p(Real("0.5"), Real("0.7"));
    const auto tb = build_ortho_table(4, p, ctx);
    const auto a = aux_integral(1, p, ctx, tb);
    CHECK(abs(a.r - (2 * tb.beta[1] - 1)) <= Real("1e-60"));
  }
  {
    const WeightParams p(Real("0.8"), Real("-0.4"));
    const auto tb = build_ortho_table(5, p, ctx);
    const auto a = aux_integral(3, p, ctx, tb);
    CHECK(abs(a.R - p.t * (7 + 2 * p.lambda - 2 * tb.beta[3] - 2 * tb.beta[4])) <= Real("1e-60"));
    CHECK(abs(a.r - tb.r[3]) <= Real("1e-60"));
  }
}

TEST_CASE("cofactor determinants agree with the LDL product") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const WeightParams p(Real("0.5"), Real("0.7"));
  CHECK(rel_err(hankel_det_direct(1, p, ctx), moment(0, p, ctx)) <= Real("1e-140"));
  CHECK(rel_err(hankel_det_direct(2, p, ctx), moment(0, p, ctx) * moment(2, p, ctx)) <= Real("1e-140"));
  const auto tb = build_ortho_table(8, p, ctx);
  for (long n : {3L, 5L, 8L}) {
    CAPTURE(n);
    CHECK(rel_err(hankel_det_direct(n, p, ctx), tb.D[at(n)]) <= Real("1e-100"));
  }
  CHECK_THROWS_AS(hankel_det_direct(9, p, ctx), DomainError);
}

TEST_CASE("pivot failure reports the failing order") {
  auto ctx = NumericContext::with_precision(128);
  ctx.quad_rel_tol = Real("1e-30");
  bool raised = false;
  try {
    build_ortho_table(120, WeightParams(Real(1), Real("0.5")), ctx);
  } catch (const PrecisionError& e) {
    raised = true;
    CHECK(e.order() > 0);
  }
  CHECK(raised);
}
