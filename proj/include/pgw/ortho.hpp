#ifndef PGW_ORTHO_HPP
#define PGW_ORTHO_HPP

#include <vector>

#include "pgw/context.hpp"
#include "pgw/moments.hpp"
#include "pgw/real.hpp"

namespace pgw {

// Monic orthogonal system of e^{-x^2}(1 + t x^2)^lambda up to degree N.
//
// Arrays carry one or two entries beyond N so that every quantity at n <= N
// (R_N needs beta_{N+1}) is available:
//   D, logD: 0..N+2   h, beta, r, H: 0..N+1   p: 0..N+2   R: 0..N
struct OrthoTable {
  WeightParams params;
  long N = 0;
  long precision_bits = 0;
  std::vector<Real> D;
  std::vector<Real> logD;
  std::vector<Real> h;
  std::vector<Real> beta;
  std::vector<Real> p;
  std::vector<Real> r;
  std::vector<Real> R;
  std::vector<Real> H;
};

enum class OrthoRoute {
  full,   // LDL^T of the (N+2)x(N+2) moment matrix
  split,  // two half-size Hankel systems in mu_{2i+2j} and mu_{2i+2j+2}
};

// Throws PrecisionError carrying the failing order if a pivot is not positive.
OrthoTable build_ortho_table(long N, const WeightParams& params, const NumericContext& ctx,
                             OrthoRoute route = OrthoRoute::full);

// Fills beta, p, r, R, H, D and logD from norms h_0..h_{N+1}.
void derive_from_norms(OrthoTable& table);

struct PolyValue {
  Real value;
  Real d1;
  Real d2;
};

// P_n(z), P_n'(z), P_n''(z) from x P_n = P_{n+1} + beta_n P_{n-1}.
PolyValue eval_polynomial(long n, const Real& z, const OrthoTable& table);

struct AuxPair {
  Real R;
  Real r;
};

// R_n = (2 lambda t / h_n) ∫ P_n^2 w / (1 + t y^2) dy,
// r_n = (2 lambda t / h_{n-1}) ∫ y P_n P_{n-1} w / (1 + t y^2) dy  (r_0 = 0).
AuxPair aux_integral(long n, const WeightParams& params, const NumericContext& ctx, const OrthoTable& table);

// det(mu_{j+k})_{j,k<n} by cofactor expansion over Kummer-U moments.
Real hankel_det_direct(long n, const WeightParams& params, const NumericContext& ctx);

// Largest relative change of D, h, beta, p, r, R, H between the table and a
// rebuild with `extra_bits` more precision (absolute change for zero entries).
Real certify_table(const OrthoTable& table, const NumericContext& ctx, long extra_bits = 128);

}  // namespace pgw

#endif  // PGW_ORTHO_HPP
