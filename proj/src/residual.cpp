#include "pgw/residual.hpp"

#include <algorithm>
#include <utility>

namespace pgw {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::degenerate:
      return "degenerate";
  }
  return "fail";
}

Real term_sum_residual(const std::vector<Real>& terms, Real& scale, bool absolute) {
  Real sum(0);
  Real abs_sum(0);
  for (const auto& t : terms) {
    sum += t;
    abs_sum += abs(t);
  }
  if (absolute) {
    scale = Real(1);
    return abs(sum);
  }
  if (abs_sum.is_zero()) {
    scale = Real(1);
    return Real(0);
  }
  scale = abs_sum;
  return abs(sum) / abs_sum;
}

ReportBuilder::ReportBuilder(std::string check_id, const WeightParams& params, const Real& tolerance, bool degenerate)
    : degenerate_(degenerate) {
  report_.check_id = std::move(check_id);
  report_.params = params;
  report_.tolerance = tolerance;
  report_.residual = Real(0);
  report_.scale = Real(1);
}

void ReportBuilder::add(long n, const std::vector<Real>& terms) {
  Real scale;
  const Real res = term_sum_residual(terms, scale, degenerate_);
  add_value(n, res, scale);
}

void ReportBuilder::add_value(long n, const Real& residual, const Real& scale) {
  if (report_.samples.empty()) {
    report_.n_min = n;
    report_.n_max = n;
  }
  report_.n_min = std::min(report_.n_min, n);
  report_.n_max = std::max(report_.n_max, n);
  if (report_.samples.empty() || residual > report_.residual) {
    report_.residual = residual;
    report_.scale = scale;
    report_.worst_n = n;
  }
  report_.samples.push_back({n, residual, scale});
}

void ReportBuilder::set_half_step(const Real& residual) {
  report_.has_half_step = true;
  report_.residual_half_step = residual;
}

void ReportBuilder::set_note(std::string note) { report_.note = std::move(note); }

ResidualReport ReportBuilder::finish() const {
  ResidualReport r = report_;
  r.pass = r.residual <= r.tolerance;
  if (degenerate_) r.status = CheckStatus::degenerate;
  else r.status = r.pass ? CheckStatus::pass : CheckStatus::fail;
  if (degenerate_ && r.note.empty()) r.note = "degenerate (lambda=0): absolute residual";
  return r;
}

ResidualReport degenerate_report(const std::string& check_id, const WeightParams& params, long n,
                                 const Real& tolerance, const std::string& note) {
  ResidualReport r;
  r.check_id = check_id;
  r.params = params;
  r.n_min = r.n_max = r.worst_n = n;
  r.residual = Real(0);
  r.scale = Real(1);
  r.tolerance = tolerance;
  r.pass = true;
  r.status = CheckStatus::degenerate;
  r.note = note;
  return r;
}

}  // namespace pgw
