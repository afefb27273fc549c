#ifndef PGW_FIT_HPP
#define PGW_FIT_HPP

#include <vector>

#include "pgw/context.hpp"
#include "pgw/ortho.hpp"
#include "pgw/series.hpp"

namespace pgw {

struct FitResult {
  Real lambda;
  Real t;
  std::vector<long> n_grid;
  Real c1;
  Real c0;
  // change against the fit on the grid without its smallest n
  Real c1_error;
  Real c0_error;
};

// Fits c1~, c0~ in the ln D_n expansion. With g(n) = ln D_n minus every
// printed term except n c1~ + c0~, solves
//   g(n_i) = c1 n_i + c0 + sum_j d_j n_i^{-(3 + j)/2}    (j = 1 .. k-2)
// exactly on the k grid points. DomainError if the grid has fewer than 3
// points, is not ascending or exceeds the table.
FitResult fit_constants_from_table(const OrthoTable& table, const std::vector<long>& n_grid);

// Builds one table at max(ctx bits, precision_for_degree(max n)) and fits.
FitResult fit_constants(const Real& lambda, const Real& t, const std::vector<long>& n_grid,
                        const NumericContext& ctx);

// `points` values ending at nmax with spacing `step`.
std::vector<long> default_fit_grid(long nmax, long points = 8, long step = 8);

}  // namespace pgw

#endif  // PGW_FIT_HPP
