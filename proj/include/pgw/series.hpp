#ifndef PGW_SERIES_HPP
#define PGW_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pgw/moments.hpp"
#include "pgw/real.hpp"

namespace pgw {

enum class SeriesKind { endpoint_b2, lagrange_A, free_energy_F, beta, p_coeff, H, logD };

const char* to_string(SeriesKind k);
// Accepts the enum names and the CLI spellings b2, A, F, beta, p, H, logD;
// throws ConfigError otherwise.
SeriesKind parse_series_kind(const std::string& s);

// coefficient * n^power * (ln n)^(log_n ? 1 : 0)
struct SeriesTerm {
  Real power;
  bool log_n = false;
  Real coefficient;
};

// (c1~, c0~) of the Hankel determinant expansion.
struct SeriesConstants {
  Real c1;
  Real c0;
};

// Printed large-n expansions, terms ordered by decreasing power of n.
struct AsymptoticSeries {
  SeriesKind kind = SeriesKind::beta;
  Real lambda;
  Real t;
  std::vector<SeriesTerm> terms;
  std::optional<SeriesConstants> constants;

  // Remainder is O(n^remainder_power).
  Real remainder_power;

  // Sum of the first `count` terms (all by default).
  Real evaluate(const Real& n, long count = -1) const;
};

// Coefficients are evaluated from lambda and t at call time. kind logD
// requires constants; DomainError if missing or if t <= 0.
AsymptoticSeries make_series(SeriesKind kind, const WeightParams& params,
                             const std::optional<SeriesConstants>& constants = std::nullopt);

Real series_eval(SeriesKind kind, const Real& n, const WeightParams& params,
                 const std::optional<SeriesConstants>& constants = std::nullopt);

// (ln 2pi, zeta'(-1)): the lambda = 0 constants.
SeriesConstants gaussian_constants();

}  // namespace pgw

#endif  // PGW_SERIES_HPP
