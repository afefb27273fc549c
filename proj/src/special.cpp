#include "pgw/special.hpp"

#include "pgw/errors.hpp"
#include "pgw/quadrature.hpp"

namespace pgw {

Real gamma(const Real& x, const NumericContext& ctx) {
  ContextScope scope(ctx);
  if (x <= 0 && mpfr_integer_p(x.raw())) throw DomainError("gamma: pole at non-positive integer " + x.str(20));
  Real r;
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real kummer_u(const Real& a, const Real& b, const Real& z, const NumericContext& ctx) {
  if (!(a > 0)) throw DomainError("kummer_u: requires a > 0");
  if (!(z > 0)) throw DomainError("kummer_u: requires z > 0");
  ContextScope scope(ctx);
  const Real am1 = a - 1;
  const Real expo = b - a - 1;
  // Evaluated in log form so the large-a peak never overflows intermediates.
  auto integrand = [&](const Real& s) { return exp(am1 * log(s) + expo * log1p(s) - z * s); };
  const Real integral = integrate(integrand, Domain::half_line(Real(0)), ctx);
  return integral / gamma(a, ctx);
}

}  // namespace pgw
