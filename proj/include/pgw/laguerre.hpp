#ifndef PGW_LAGUERRE_HPP
#define PGW_LAGUERRE_HPP

#include <vector>

#include "pgw/context.hpp"
#include "pgw/ortho.hpp"
#include "pgw/real.hpp"
#include "pgw/residual.hpp"

namespace pgw {

// Monic orthogonal system of x^alpha e^{-x} (x + ttilde)^lambda on (0, inf),
// built from its own moments. With
//   x P~_n = P~_{n+1} + alpha_t[n] P~_n + beta_t[n] P~_{n-1}
// and P~_n = x^n + pt[n] x^{n-1} + ...
//   Dt: 0..N+1   ht, alpha_t, beta_t: 0..N   pt: 0..N+1
struct LaguerreTable {
  Real alpha;
  Real ttilde;
  Real lambda;
  long N = 0;
  long precision_bits = 0;
  std::vector<Real> Dt;
  std::vector<Real> ht;
  std::vector<Real> pt;
  std::vector<Real> alpha_t;
  std::vector<Real> beta_t;
};

// Throws DomainError unless alpha > -1 and ttilde > 0; PrecisionError on a
// non-positive pivot.
LaguerreTable build_laguerre_table(long N, const Real& alpha, const Real& ttilde, const Real& lambda,
                                   const NumericContext& ctx);

// P~_n(x) by the three-term recurrence.
Real eval_laguerre_polynomial(long n, const Real& x, const LaguerreTable& table);

// R~_n = (lambda / h~_n) ∫_0^inf P~_n^2 w~ / (x + ttilde) dx by quadrature.
Real laguerre_aux_R(long n, const LaguerreTable& table, const NumericContext& ctx);

// Largest relative change of Dt, ht, pt against a rebuild with more bits.
Real certify_laguerre_table(const LaguerreTable& table, const NumericContext& ctx, long extra_bits = 128);

struct BridgeTolerances {
  Real norms{Real("1e-100")};       // h, D and p relations
  Real polynomials{Real("1e-80")};  // P~_n(x) against P_2n(sqrt x)
  Real aux{Real("1e-60")};          // R_n against 2 R~
};

// Even/odd split relations between the system of e^{-x^2}(1+tx^2)^lambda and
// the Laguerre systems at ttilde = 1/t, alpha = -1/2 and alpha = 1/2, for
// every k in [0, n].
std::vector<ResidualReport> check_weight_split(long n, const WeightParams& params, const NumericContext& ctx,
                                               const BridgeTolerances& tol = BridgeTolerances());

// Sample points for the polynomial relation.
std::vector<Real> default_split_samples();

}  // namespace pgw

#endif  // PGW_LAGUERRE_HPP
