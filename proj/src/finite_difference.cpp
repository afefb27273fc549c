#include "pgw/finite_difference.hpp"

#include "pgw/errors.hpp"

namespace pgw {

Real fd_derivative(const RealFunction& f, const Real& x0, int order, const NumericContext& ctx) {
  if (order != 1 && order != 2) throw DomainError("fd_derivative: order must be 1 or 2");
  if (ctx.fd_order != 2 && ctx.fd_order != 4) throw ConfigError("fd_order in {2,4} violated");
  ContextScope scope(ctx);

  const Real h = (x0 + ctx.fd_step) - x0;
  if (h.is_zero()) throw ConfigError("fd_step below the resolution of x0 at this precision");
  const Real xp1 = x0 + h;
  const Real xm1 = x0 - h;

  if (ctx.fd_order == 2) {
    if (order == 1) return (f(xp1) - f(xm1)) / (2 * h);
    return (f(xp1) - 2 * f(x0) + f(xm1)) / square(h);
  }

  const Real xp2 = x0 + 2 * h;
  const Real xm2 = x0 - 2 * h;
  if (order == 1) return (f(xm2) - 8 * f(xm1) + 8 * f(xp1) - f(xp2)) / (12 * h);
  return (-f(xm2) + 16 * f(xm1) - 30 * f(x0) + 16 * f(xp1) - f(xp2)) / (12 * square(h));
}

FdEstimate fd_derivative_with_error(const RealFunction& f, const Real& x0, int order, const NumericContext& ctx) {
  ContextScope scope(ctx);
  const Real coarse = fd_derivative(f, x0, order, ctx);
  const Real fine = fd_derivative(f, x0, order, ctx.with_fd_step(ctx.fd_step / 2));
  FdEstimate est;
  est.value = fine;
  est.error_estimate = abs(coarse - fine) / ((1L << ctx.fd_order) - 1);
  return est;
}

}  // namespace pgw
