#ifndef PGW_COULOMB_HPP
#define PGW_COULOMB_HPP

#include "pgw/context.hpp"
#include "pgw/moments.hpp"
#include "pgw/real.hpp"

namespace pgw {

// Equilibrium density of n charges in v(x) = x^2 - lambda ln(1 + t x^2),
// supported on (-b, b) in the one-cut regime lambda t <= 1.
struct EquilibriumMeasure {
  WeightParams params;
  Real n;
  Real b;
  Real b2;
  Real A;  // Lagrange multiplier
  int newton_iterations = 0;
};

// Root of b^2 - 2 lambda + 2 lambda / sqrt(1 + b^2 t) = 2n by safeguarded
// Newton, then A = b^2/2 - n ln(b^2/4) - 2 lambda ln((1 + sqrt(1 + b^2 t))/2).
// Throws OneCutError if lambda t > 1, DomainError if n <= 0.
EquilibriumMeasure solve_endpoint(const Real& n, const WeightParams& params, const NumericContext& ctx);

// Residual of the endpoint equation at eq.b2.
Real endpoint_residual(const EquilibriumMeasure& eq);

// sigma(x) = sqrt(b^2 - x^2)/pi * [1 - lambda t / (sqrt(1 + b^2 t)(1 + t x^2))];
// DomainError for |x| > b.
Real density(const Real& x, const EquilibriumMeasure& eq);

// ∫_{-b}^{b} sigma by quadrature.
Real normalization_check(const EquilibriumMeasure& eq, const NumericContext& ctx);

// v(x) = x^2 - lambda ln(1 + t x^2).
Real potential(const Real& x, const WeightParams& params);

// F = n A / 2 + (1/2) ∫ sigma v by quadrature.
Real free_energy_numeric(const EquilibriumMeasure& eq, const NumericContext& ctx);

}  // namespace pgw

#endif  // PGW_COULOMB_HPP
