#ifndef PGW_SPECIAL_HPP
#define PGW_SPECIAL_HPP

#include "pgw/context.hpp"
#include "pgw/real.hpp"

namespace pgw {

// Gamma function; DomainError at the poles 0, -1, -2, ...
Real gamma(const Real& x, const NumericContext& ctx);

// Confluent hypergeometric function of the second kind, from its Laplace
// representation U(a,b,z) = (1/Γ(a)) ∫_0^∞ e^{-zs} s^{a-1} (1+s)^{b-a-1} ds.
// Valid for a > 0, z > 0 and any real b; relative error <= ctx.quad_rel_tol.
Real kummer_u(const Real& a, const Real& b, const Real& z, const NumericContext& ctx);

}  // namespace pgw

#endif  // PGW_SPECIAL_HPP
