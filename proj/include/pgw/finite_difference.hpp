#ifndef PGW_FINITE_DIFFERENCE_HPP
#define PGW_FINITE_DIFFERENCE_HPP

#include <functional>

#include "pgw/context.hpp"
#include "pgw/real.hpp"

namespace pgw {

using RealFunction = std::function<Real(const Real&)>;

// Central-difference first (order = 1) or second (order = 2) derivative of f
// at x0, with stencil accuracy ctx.fd_order and step ctx.fd_step. The step
// actually used is the representable (x0 + h) - x0.
Real fd_derivative(const RealFunction& f, const Real& x0, int order, const NumericContext& ctx);

struct FdEstimate {
  Real value;           // derivative at step h/2
  Real error_estimate;  // |D(h) - D(h/2)| / (2^p - 1)
};

// Step-halving estimate of the truncation error.
FdEstimate fd_derivative_with_error(const RealFunction& f, const Real& x0, int order, const NumericContext& ctx);

}  // namespace pgw

#endif  // PGW_FINITE_DIFFERENCE_HPP
