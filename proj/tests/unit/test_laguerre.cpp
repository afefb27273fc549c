#include "doctest.h"

#include "pgw/errors.hpp"
#include "pgw/laguerre.hpp"
#include "pgw/special.hpp"

using namespace pgw;

namespace {

size_t at(long i) { return static_cast<size_t>(i); }

Real factorial(long n) {
  Real f(1);
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("classical Laguerre norms at lambda = 0") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const Real half = Real(1) / 2;

  const auto tb = build_laguerre_table(12, -half, Real(2), Real(0), ctx);
  for (long n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const Real expected = factorial(n) * gamma(Real(n) + half, ctx);
    CHECK(abs(tb.ht[at(n)] - expected) / expected <= Real("1e-140"));
    // Laguerre: alpha_n = 2n + alpha + 1, beta_n = n (n + alpha)
    CHECK(abs(tb.alpha_t[at(n)] - (2 * n + half)) <= Real("1e-140"));
    CHECK(abs(tb.beta_t[at(n)] - n * (Real(n) - half)) <= Real("1e-140"));
  }
  const auto tb2 = build_laguerre_table(2, half, Real(2), Real(0), ctx);
  CHECK(abs(tb2.ht[0] - sqrt(pi()) / 2) <= Real("1e-150"));
}

TEST_CASE("Laguerre polynomials at lambda = 0") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  // monic L_2^{(alpha)}(x) = x^2 - 2(alpha + 2) x + (alpha + 1)(alpha + 2)
  const Real alpha("0.5");
  const auto tb = build_laguerre_table(4, alpha, Real(1), Real(0), ctx);
  for (const char* xs : {"0.3", "1.7", "6"}) {
    const Real x(xs);
    const Real expected = square(x) - 2 * (alpha + 2) * x + (alpha + 1) * (alpha + 2);
    CHECK(abs(eval_laguerre_polynomial(2, x, tb) - expected) <= Real("1e-140"));
  }
  CHECK(abs(tb.pt[2] + 2 * (alpha + 2)) <= Real("1e-140"));
}

TEST_CASE("deformed Laguerre table certifies") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const auto tb = build_laguerre_table(6, Real(-1) / 2, Real(2), Real("0.7"), ctx);
  for (long n = 0; n <= 6; ++n) CHECK(tb.ht[at(n)] > 0);
  CHECK(certify_laguerre_table(tb, ctx) <= Real("1e-100"));
  for (long n = 1; n <= 7; ++n) CHECK(abs(tb.Dt[at(n)] / tb.Dt[at(n - 1)] - tb.ht[at(n - 1)]) <= Real("1e-140") * tb.ht[at(n - 1)]);

  CHECK_THROWS_AS(build_laguerre_table(3, Real(-1), Real(2), Real("0.7"), ctx), DomainError);
  CHECK_THROWS_AS(build_laguerre_table(3, Real(0), Real(0), Real("0.7"), ctx), DomainError);
}

TEST_CASE("weight split relations") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);

  for (auto p : {WeightParams(Real("0.5"), Real("0.7")), WeightParams(Real("0.8"), Real("-0.4"))}) {
    const auto reports = check_weight_split(10, p, ctx);
    CHECK(reports.size() == 10);
    for (const auto& r : reports) {
      CAPTURE(r.check_id);
      CHECK(r.status == CheckStatus::pass);
      CHECK(r.n_max == 10);
      if (r.check_id.rfind("split_R", 0) == 0) {
        CHECK(r.residual <= Real("1e-60"));
      } else if (r.check_id.rfind("split_P", 0) == 0) {
        CHECK(r.residual <= Real("1e-80"));
      } else {
        CHECK(r.residual <= Real("1e-100"));
      }
    }
  }
}

TEST_CASE("weight split at lambda = 0") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const auto reports = check_weight_split(6, WeightParams(Real("0.5"), Real(0)), ctx);
  for (const auto& r : reports) {
    CAPTURE(r.check_id);
    CHECK(r.pass);
    CHECK(r.residual <= Real("1e-100"));
  }
  CHECK(reports.back().status == CheckStatus::degenerate);
}

TEST_CASE("auxiliary R against the Hermite-side quadrature") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const WeightParams p(Real("0.5"), Real("0.7"));
  const auto herm = build_ortho_table(8, p, ctx);
  const auto even = build_laguerre_table(3, Real(-1) / 2, 1 / p.t, p.lambda, ctx);
  for (long k = 0; k <= 3; ++k) {
    const auto aux = aux_integral(2 * k, p, ctx, herm);
    CHECK(abs(2 * laguerre_aux_R(k, even, ctx) - aux.R) <= Real("1e-60"));
  }
}
