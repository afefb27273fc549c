#include "doctest.h"

#include "pgw/context.hpp"
#include "pgw/errors.hpp"
#include "pgw/finite_difference.hpp"
#include "pgw/quadrature.hpp"
#include "pgw/special.hpp"

using namespace pgw;

namespace {

Real rel_err(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("gamma known values") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const Real tol = epsilon_for(ctx.precision_bits - 8);
  CHECK(rel_err(gamma(Real(1) / 2, ctx), sqrt(pi())) <= tol);
  CHECK(rel_err(gamma(Real(5), ctx), Real(24)) <= tol);
  CHECK(rel_err(gamma(Real(3) / 2, ctx), sqrt(pi()) / 2) <= tol);
  CHECK_THROWS_AS(gamma(Real(0), ctx), DomainError);
  CHECK_THROWS_AS(gamma(Real(-3), ctx), DomainError);
}

TEST_CASE("kummer U closed forms") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const Real tol = ctx.quad_rel_tol;
  CHECK(rel_err(kummer_u(Real(1) / 2, Real(3) / 2, Real(4), ctx), Real(1) / 2) <= tol);
  CHECK(rel_err(kummer_u(Real(1) / 2, Real(5) / 2, Real(1), ctx), Real(3) / 2) <= tol);
  // U(1/2, 5/2, z) = z^{-1/2} + z^{-3/2}/2 from the binomial expansion of (1+s)
  const Real z(Real("0.37"));
  CHECK(rel_err(kummer_u(Real(1) / 2, Real(5) / 2, z, ctx), 1 / sqrt(z) + 1 / (2 * z * sqrt(z))) <= tol);

  CHECK_THROWS_AS(kummer_u(Real(0), Real(1), Real(1), ctx), DomainError);
  CHECK_THROWS_AS(kummer_u(Real(1), Real(1), Real(-1), ctx), DomainError);
}

TEST_CASE("kummer U identity U(a, a+1, z) = z^-a on a grid") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  for (const char* as : {"0.25", "0.5", "1.5", "3.5", "10.5", "20.5"}) {
    for (const char* zs : {"0.2", "1", "4", "12.5"}) {
      const Real a(as), z(zs);
      CAPTURE(as);
      CAPTURE(zs);
      CHECK(rel_err(kummer_u(a, a + 1, z, ctx), pow(z, -a)) <= 10 * ctx.quad_rel_tol);
    }
  }
}

TEST_CASE("kummer U against an independent finite-interval quadrature at doubled precision") {
  const auto ctx = NumericContext::defaults();
  const auto wide = NumericContext::with_precision(1024);
  const Real value = [&] {
    ContextScope scope(ctx);
    return kummer_u(Real(3) / 2, Real("3.2"), Real("2.5"), ctx);
  }();

  ContextScope scope(wide);
  const Real a = Real(3) / 2, b = Real("3.2"), z = Real("2.5");
  // s = u/(1-u) maps (0,1) onto (0,inf); ds = du/(1-u)^2
  auto f = [&](const Real& u) {
    const Real one_minus = 1 - u;
    const Real s = u / one_minus;
    return exp((a - 1) * log(s) + (b - a - 1) * log1p(s) - z * s) / square(one_minus);
  };
  const Real oracle = integrate(f, Domain::finite(Real(0), Real(1)), wide) / gamma(a, wide);
  CHECK(rel_err(value, oracle) <= ctx.quad_rel_tol);
}

TEST_CASE("double-exponential quadrature on the three domain kinds") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const Real tol = ctx.quad_rel_tol;
  CHECK(rel_err(integrate([](const Real& x) { return exp(-x); }, Domain::half_line(Real(0)), ctx), Real(1)) <= tol);
  CHECK(rel_err(integrate([](const Real& x) { return exp(-square(x)); }, Domain::real_line(), ctx), sqrt(pi())) <= tol);
  CHECK(rel_err(integrate([](const Real& x) { return 1 / sqrt(x); }, Domain::finite(Real(0), Real(1)), ctx), Real(2)) <=
        tol);
  // odd integrand on the real line pairs to exactly zero
  CHECK(integrate([](const Real& x) { return x * exp(-square(x)); }, Domain::real_line(), ctx).is_zero());
}

TEST_CASE("quadrature is stable under a tighter tolerance") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  auto f = [](const Real& x) { return pow(x, 4) * exp(-square(x)) * pow(1 + x * x / 2, Real("0.7")); };
  NumericContext tight = ctx;
  tight.quad_rel_tol = ctx.quad_rel_tol / 2;
  const Real a = integrate(f, Domain::real_line(), ctx);
  const Real b = integrate(f, Domain::real_line(), tight);
  CHECK(rel_err(a, b) <= ctx.quad_rel_tol);
}

TEST_CASE("quadrature is deterministic") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  auto f = [](const Real& x) { return exp(-x) * log1p(x); };
  CHECK(integrate(f, Domain::half_line(Real(0)), ctx).str() == integrate(f, Domain::half_line(Real(0)), ctx).str());
}

TEST_CASE("finite differences") {
  const auto ctx = NumericContext::defaults();
  ContextScope scope(ctx);
  const Real tol = Real("1e-45");
  CHECK(abs(fd_derivative([](const Real& x) { return square(x); }, Real(3), 1, ctx) - 6) <= tol);
  CHECK(abs(fd_derivative([](const Real& x) { return exp(x); }, Real(0), 2, ctx) - 1) <= tol);
  auto sine = [](const Real& x) {
    Real r;
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
  };
  CHECK(abs(fd_derivative(sine, Real(0), 1, ctx) - 1) <= tol);
}

TEST_CASE("finite-difference error shrinks by about 2^order when the step halves") {
  auto ctx = NumericContext::defaults();
  ctx.fd_step = Real("1e-3");
  ContextScope scope(ctx);
  auto f = [](const Real& x) { return exp(x); };
  for (int order : {2, 4}) {
    ctx.fd_order = order;
    for (int deriv : {1, 2}) {
      const Real e1 = abs(fd_derivative(f, Real(1), deriv, ctx) - exp(Real(1)));
      const Real e2 = abs(fd_derivative(f, Real(1), deriv, ctx.with_fd_step(ctx.fd_step / 2)) - exp(Real(1)));
      const double ratio = (e1 / e2).to_double();
      CAPTURE(order);
      CAPTURE(deriv);
      CHECK(ratio == doctest::Approx(double(1 << order)).epsilon(0.05));
    }
  }
}

TEST_CASE("context invariants") {
  auto ctx = NumericContext::defaults();
  CHECK_NOTHROW(ctx.validate());
  ctx.precision_bits = 64;
  CHECK_THROWS_AS(ctx.validate(), ConfigError);
  ctx = NumericContext::defaults();
  ctx.fd_order = 3;
  CHECK_THROWS_AS(ctx.validate(), ConfigError);
  ctx = NumericContext::defaults();
  ctx.fd_step = Real("1e-40");
  CHECK_THROWS_AS(ctx.validate(), ConfigError);
  CHECK(NumericContext::for_degree(256).precision_bits == 4160);
}
