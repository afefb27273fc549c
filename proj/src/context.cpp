#include "pgw/context.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pgw/errors.hpp"

namespace pgw {

namespace {

constexpr long kMetaBits = 64;
constexpr long kQuadGuardBits = 113;

Real decimal_power(long exponent) {
  WorkingPrecision p(kMetaBits);
  return pow(Real(10), exponent);
}

}  // namespace

NumericContext NumericContext::defaults() { return with_precision(512); }

NumericContext NumericContext::with_precision(long bits) {
  NumericContext ctx;
  ctx.precision_bits = bits;
  const long digits = static_cast<long>(std::floor(static_cast<double>(bits - kQuadGuardBits) * std::log10(2.0)));
  ctx.quad_rel_tol = decimal_power(-std::max(digits, 1L));
  // h^4 truncation balanced against eps/h^2 roundoff; 1e-25 at 512 bits
  const long fd_digits = static_cast<long>(std::floor(static_cast<double>(bits) * std::log10(2.0) / 6));
  ctx.fd_step = decimal_power(-std::max(fd_digits, 1L));
  ctx.fd_order = 4;
  return ctx;
}

long precision_for_degree(long degree) { return std::max(512L, 64 + 16 * degree); }

NumericContext NumericContext::for_degree(long degree) { return with_precision(precision_for_degree(degree)); }

void NumericContext::validate() const {
  if (precision_bits < 128) throw ConfigError("precision_bits >= 128 violated");
  if (fd_order != 2 && fd_order != 4) throw ConfigError("fd_order in {2,4} violated");
  WorkingPrecision p(precision_bits + 64);
  const Real floor = epsilon_for(precision_bits - 16);
  if (!(quad_rel_tol > 0) || quad_rel_tol < floor) {
    throw ConfigError("quad_rel_tol >= 2^(-precision_bits+16) violated");
  }
  if (!(fd_step > 0) || !(pow(fd_step, fd_order + 1) > epsilon_for(precision_bits))) {
    throw ConfigError("fd_step^(fd_order+1) > 2^(-precision_bits) violated");
  }
}

NumericContext NumericContext::with_fd_step(const Real& step) const {
  NumericContext ctx = *this;
  ctx.fd_step = step;
  return ctx;
}

}  // namespace pgw
