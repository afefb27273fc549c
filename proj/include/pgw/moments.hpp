#ifndef PGW_MOMENTS_HPP
#define PGW_MOMENTS_HPP

#include <memory>
#include <vector>

#include "pgw/context.hpp"
#include "pgw/real.hpp"

namespace pgw {

// Weight e^{-x^2} (1 + t x^2)^lambda on the real line.
struct WeightParams {
  Real t;
  Real lambda;

  WeightParams() = default;
  WeightParams(const Real& t_, const Real& lambda_);

  // lambda·t <= 1: single-interval equilibrium support.
  bool one_cut() const;
  // Throws DomainError unless t > 0.
  void validate() const;
  // Throws OneCutError if lambda·t > 1.
  void require_one_cut() const;
};

struct MomentTable {
  WeightParams params;
  long m = 0;             // mu holds mu_0 .. mu_{2m}
  std::vector<Real> mu;
};

// mu_j = t^{-(j+1)/2} Γ((j+1)/2) U((j+1)/2, (j+3)/2 + lambda, 1/t), 0 for odd j.
Real moment(long j, const WeightParams& params, const NumericContext& ctx);

// Direct quadrature of x^j w(x) over the real line.
Real moment_quadrature(long j, const WeightParams& params, const NumericContext& ctx);

// mu_0 .. mu_{2m} by the Pearson three-term recurrence
//   mu_{2k+4} = {[(2 lambda + 2k + 3) t - 2] mu_{2k+2} + (2k+1) mu_{2k}} / (2t),
// seeded from `moment` computed with extra guard bits. Entries mu_0, mu_{2⌊m/2⌋}
// and mu_{2m} are certified against the Kummer-U route; on mismatch the table
// is rebuilt with 128 more bits and PrecisionError is thrown if that fails too.
// Results are cached per (t, lambda, m, precision_bits).
std::shared_ptr<const MomentTable> moment_table_recurrence(long m, const WeightParams& params,
                                                           const NumericContext& ctx);

// Same recurrence without seeding tricks, caching or certification.
std::vector<Real> pearson_recurrence(long m, const Real& mu0, const Real& mu2, const WeightParams& params);

// ∫_0^∞ x^{j+α} e^{-x} (x + t̃)^λ dx = t̃^{j+α+1+λ} Γ(j+α+1) U(j+α+1, j+α+λ+2, t̃).
Real laguerre_moment(long j, const Real& alpha, const Real& ttilde, const Real& lambda, const NumericContext& ctx);

// Same integral by direct half-line quadrature.
Real laguerre_moment_quadrature(long j, const Real& alpha, const Real& ttilde, const Real& lambda,
                                const NumericContext& ctx);

// nu_0 .. nu_{count-1} for the Laguerre weight by the recurrence
//   nu_{k+2} = (k + α + λ + 2 - t̃) nu_{k+1} + t̃ (k + α + 1) nu_k,
// seeded and certified against `laguerre_moment` like the Hermite-side table.
std::vector<Real> laguerre_moment_table(long count, const Real& alpha, const Real& ttilde, const Real& lambda,
                                        const NumericContext& ctx);

// Leading principal minors of (mu_{j+k})_{j,k<=order} via LDL^T; true if all
// pivots are positive.
bool hankel_positive(const MomentTable& table, long order);

void clear_moment_cache();

}  // namespace pgw

#endif  // PGW_MOMENTS_HPP
