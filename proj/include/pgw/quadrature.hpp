#ifndef PGW_QUADRATURE_HPP
#define PGW_QUADRATURE_HPP

#include <functional>

#include "pgw/context.hpp"
#include "pgw/real.hpp"

namespace pgw {

using Integrand = std::function<Real(const Real&)>;

// Integration domain. Finite intervals use tanh-sinh, half-lines exp-sinh and
// the real line sinh-sinh.
struct Domain {
  enum class Kind { finite, half_line, real_line };

  Kind kind = Kind::real_line;
  Real lower;
  Real upper;

  static Domain finite(const Real& a, const Real& b);
  static Domain half_line(const Real& a);  // [a, +inf)
  static Domain real_line();
};

struct QuadratureResult {
  Real value;
  Real error_estimate;  // |I_L - I_{L-1}| at the accepted level
  int level = 0;
  long evaluations = 0;
};

// Double-exponential quadrature with trapezoid refinement (step halving) until
// two successive levels agree to ctx.quad_rel_tol relative. The integrand may
// have algebraic endpoint singularities on finite/half-line domains; it is
// never evaluated exactly at a finite endpoint.
//
// Throws ConvergenceError after kMaxLevel halvings.
QuadratureResult integrate_detailed(const Integrand& f, const Domain& domain, const NumericContext& ctx);

Real integrate(const Integrand& f, const Domain& domain, const NumericContext& ctx);

inline constexpr int kMaxQuadratureLevel = 14;

}  // namespace pgw

#endif  // PGW_QUADRATURE_HPP
