#include "pgw/coulomb.hpp"

#include "pgw/errors.hpp"
#include "pgw/quadrature.hpp"

namespace pgw {

namespace {

constexpr int kMaxNewton = 200;

Real cub(const Real& u, const Real& n, const Real& t, const Real& lambda) {
  return u - 2 * lambda + 2 * lambda / sqrt(1 + u * t) - 2 * n;
}

Real cub_prime(const Real& u, const Real& t, const Real& lambda) {
  const Real q = 1 + u * t;
  return 1 - lambda * t / (q * sqrt(q));
}

}  // namespace

EquilibriumMeasure solve_endpoint(const Real& n, const WeightParams& params, const NumericContext& ctx) {
  params.validate();
  params.require_one_cut();
  if (!(n > 0)) throw DomainError("equilibrium needs n > 0");
  ContextScope scope(ctx);
  const Real& t = params.t;
  const Real& lambda = params.lambda;

  // f is increasing on (0, inf) when lambda t <= 1, f(0) = -2n < 0 and
  // f(2n + 2|lambda| + 1) > 0
  Real lo(0);
  Real hi = 2 * n + 2 * abs(lambda) + 1;
  Real u = lambda > 0 ? 2 * n + 2 * lambda : 2 * n;
  const Real tol = ldexp(Real(1), -(ctx.precision_bits - 32));

  EquilibriumMeasure eq;
  eq.params = params;
  eq.n = n;
  bool converged = false;
  for (int it = 1; it <= kMaxNewton; ++it) {
    eq.newton_iterations = it;
    const Real f = cub(u, n, t, lambda);
    if (f.is_zero()) {
      converged = true;
      break;
    }
    if (f < 0) lo = u;
    else hi = u;
    Real next = u - f / cub_prime(u, t, lambda);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const Real step = abs(next - u);
    u = next;
    if (step <= tol * u) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("endpoint Newton iteration did not converge");

  eq.b2 = u;
  eq.b = sqrt(u);
  eq.A = u / 2 - n * log(u / 4) - 2 * lambda * log((1 + sqrt(1 + u * t)) / 2);
  return eq;
}

Real endpoint_residual(const EquilibriumMeasure& eq) {
  return cub(eq.b2, eq.n, eq.params.t, eq.params.lambda);
}

Real density(const Real& x, const EquilibriumMeasure& eq) {
  if (abs(x) > eq.b) throw DomainError("density evaluated outside the support");
  const Real& t = eq.params.t;
  const Real gap = eq.b2 - square(x);
  if (!(gap > 0)) return Real(0);
  return sqrt(gap) / pi() * (1 - eq.params.lambda * t / (sqrt(1 + eq.b2 * t) * (1 + t * square(x))));
}

Real normalization_check(const EquilibriumMeasure& eq, const NumericContext& ctx) {
  ContextScope scope(ctx);
  return integrate([&](const Real& x) { return density(x, eq); }, Domain::finite(-eq.b, eq.b), ctx);
}

Real potential(const Real& x, const WeightParams& params) {
  const Real x2 = square(x);
  return x2 - params.lambda * log1p(params.t * x2);
}

Real free_energy_numeric(const EquilibriumMeasure& eq, const NumericContext& ctx) {
  eq.params.require_one_cut();
  ContextScope scope(ctx);
  const Real integral = integrate([&](const Real& x) { return density(x, eq) * potential(x, eq.params); },
                                  Domain::finite(-eq.b, eq.b), ctx);
  return eq.n * eq.A / 2 + integral / 2;
}

}  // namespace pgw
