#ifndef PGW_RESIDUAL_HPP
#define PGW_RESIDUAL_HPP

#include <string>
#include <vector>

#include "pgw/moments.hpp"
#include "pgw/real.hpp"

namespace pgw {

enum class CheckStatus { pass, fail, degenerate };

const char* to_string(CheckStatus s);

struct ResidualSample {
  long n = 0;
  Real residual;
  Real scale;
};

// One verified identity or equation. `residual` is the maximum over the
// sampled n of |sum of terms| / (sum of |terms|); a degenerate check (every
// term vanishes identically, e.g. lambda = 0) reports the absolute residual
// with scale 1 instead.
struct ResidualReport {
  std::string check_id;
  long n_min = 0;
  long n_max = 0;
  WeightParams params;
  Real residual;
  Real scale;
  Real tolerance;
  bool pass = false;
  CheckStatus status = CheckStatus::fail;
  long worst_n = 0;
  std::vector<ResidualSample> samples;
  // Finite-difference checks are recomputed with half the step.
  bool has_half_step = false;
  Real residual_half_step;
  std::string note;
};

// |Σ terms| / Σ|terms|; 0 with scale 1 when every term is zero. With
// `absolute` the unnormalized |Σ terms| is returned and scale is 1.
Real term_sum_residual(const std::vector<Real>& terms, Real& scale, bool absolute = false);

class ReportBuilder {
 public:
  ReportBuilder(std::string check_id, const WeightParams& params, const Real& tolerance, bool degenerate = false);

  void add(long n, const std::vector<Real>& terms);
  void add_value(long n, const Real& residual, const Real& scale);
  void set_half_step(const Real& residual);
  void set_note(std::string note);

  ResidualReport finish() const;

 private:
  ResidualReport report_;
  bool degenerate_;
};

// A check that could not be evaluated because its change of variables is
// undefined; reported as degenerate rather than failed.
ResidualReport degenerate_report(const std::string& check_id, const WeightParams& params, long n,
                                 const Real& tolerance, const std::string& note);

}  // namespace pgw

#endif  // PGW_RESIDUAL_HPP
