#ifndef PGW_PAINLEVE_HPP
#define PGW_PAINLEVE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pgw/context.hpp"
#include "pgw/ortho.hpp"
#include "pgw/residual.hpp"

namespace pgw {

// Default tolerances per suite.
struct VerifyTolerances {
  Real ladder{Real("1e-100")};
  Real difference{Real("1e-100")};
  Real initial{Real("1e-110")};
  Real evolution{Real("1e-60")};
  Real painleve{Real("1e-50")};
  Real ode{Real("1e-80")};

  // Every tolerance replaced by `tol`.
  static VerifyTolerances uniform(const Real& tol);
};

// Orthogonal systems of one lambda at shifted values of t (variable::t) or of
// s = 1/t (variable::s), built on demand and memoized by the exact shifted
// value. Finite differences in t or s read quantities from here.
class TableFamily {
 public:
  enum class Variable { t, s };

  TableFamily(long N, const Real& lambda, Variable var, const NumericContext& ctx);

  const OrthoTable& at(const Real& x);
  long size() const { return static_cast<long>(tables_.size()); }

 private:
  long N_;
  Real lambda_;
  Variable var_;
  NumericContext ctx_;
  std::map<std::string, OrthoTable> tables_;
};

// (re1)-(re4) and the beta_n R_n identity over n in [1, N-1].
std::vector<ResidualReport> check_ladder_identities(const OrthoTable& table,
                                                    const VerifyTolerances& tol = VerifyTolerances());

// Difference equations for beta_n and p(n) over n in [1, N-1], their initial
// conditions against the Kummer-U formulas, and the d-PIV form in
// x_n = 2 beta_n - n - lambda.
std::vector<ResidualReport> check_difference_equations(const OrthoTable& table, const NumericContext& ctx,
                                                       const VerifyTolerances& tol = VerifyTolerances());

// t-derivatives of ln h_n, p(n), beta_n, r_n, R_n and ln D_n by finite
// differences over re-orthogonalized tables.
std::vector<ResidualReport> check_t_evolution(long n, const WeightParams& params, const NumericContext& ctx,
                                              const VerifyTolerances& tol = VerifyTolerances());

// Painlevé V for W_n(s) = R_n/(R_n - 2), s = 1/t, and the second-order ODE
// for R_n(t). Throws DegenerateTransformError at lambda = 0 or when R_n is
// too close to 0 or 2.
std::vector<ResidualReport> check_painleve_v(long n, const WeightParams& params, const NumericContext& ctx,
                                             const VerifyTolerances& tol = VerifyTolerances());

// sigma-form in s, second-order ODEs for p(n,t), r_n(t), beta_n(t), H_n(t),
// and the quadratic linking r_n with H_n and H_n'.
std::vector<ResidualReport> check_sigma_form(long n, const WeightParams& params, const NumericContext& ctx,
                                             const VerifyTolerances& tol = VerifyTolerances());

// Coefficient functions of the second-order ODE for P_n(z).
struct OdeCoefficients {
  Real A, dA, B, dB, v1, sumA;
};
OdeCoefficients ode_coefficients(long n, const Real& z, const OrthoTable& table);

// Residual of the P_n ODE at each sample; throws DomainError if A_n vanishes.
ResidualReport check_polynomial_ode(long n, const std::vector<Real>& z_samples, const OrthoTable& table,
                                    const VerifyTolerances& tol = VerifyTolerances());

std::vector<Real> default_ode_samples();

}  // namespace pgw

#endif  // PGW_PAINLEVE_HPP
