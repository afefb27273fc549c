#ifndef PGW_LINALG_HPP
#define PGW_LINALG_HPP

#include <vector>

#include "pgw/real.hpp"

namespace pgw {

// M = L·diag(d)·L^T for the Hankel matrix M[i][j] = seq[i+j], 0 <= i,j < size.
// L is unit lower triangular; row i of `lower` holds L[i][0..i-1].
struct LdlFactor {
  std::vector<Real> pivots;
  std::vector<std::vector<Real>> lower;
};

// Throws PrecisionError carrying the order of the first non-positive pivot.
LdlFactor ldl_hankel(const std::vector<Real>& seq, long size, long stride = 1, long offset = 0);

}  // namespace pgw

#endif  // PGW_LINALG_HPP
