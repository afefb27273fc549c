#include "pgw/series.hpp"

#include <algorithm>

#include "pgw/errors.hpp"

namespace pgw {

namespace {

Real q(long a, long b) { return Real(a) / Real(b); }

struct TermList {
  std::vector<SeriesTerm> terms;
  void add(const Real& power, const Real& c) { terms.push_back({power, false, c}); }
  void add_log(const Real& power, const Real& c) { terms.push_back({power, true, c}); }
};

}  // namespace

const char* to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::endpoint_b2:
      return "b2";
    case SeriesKind::lagrange_A:
      return "A";
    case SeriesKind::free_energy_F:
      return "F";
    case SeriesKind::beta:
      return "beta";
    case SeriesKind::p_coeff:
      return "p";
    case SeriesKind::H:
      return "H";
    case SeriesKind::logD:
      return "logD";
  }
  return "beta";
}

SeriesKind parse_series_kind(const std::string& s) {
  if (s == "b2" || s == "endpoint_b2") return SeriesKind::endpoint_b2;
  if (s == "A" || s == "lagrange_A") return SeriesKind::lagrange_A;
  if (s == "F" || s == "free_energy_F") return SeriesKind::free_energy_F;
  if (s == "beta") return SeriesKind::beta;
  if (s == "p" || s == "p_coeff") return SeriesKind::p_coeff;
  if (s == "H") return SeriesKind::H;
  if (s == "logD") return SeriesKind::logD;
  throw ConfigError("unknown series kind '" + s + "'");
}

Real AsymptoticSeries::evaluate(const Real& n, long count) const {
  if (!(n > 0)) throw DomainError("series evaluated at n <= 0");
  const Real ln = log(n);
  const size_t m = count < 0 ? terms.size() : std::min(terms.size(), static_cast<size_t>(count));
  Real sum(0);
  for (size_t i = 0; i < m; ++i) {
    const auto& term = terms[i];
    Real v = term.coefficient * exp(term.power * ln);
    if (term.log_n) v *= ln;
    sum += v;
  }
  return sum;
}

AsymptoticSeries make_series(SeriesKind kind, const WeightParams& params,
                             const std::optional<SeriesConstants>& constants) {
  params.validate();
  const Real& t = params.t;
  const Real& l = params.lambda;
  const Real s2 = sqrt(Real(2));
  const Real st = sqrt(t);
  const Real t2 = square(t), t3 = t2 * t, t4 = t3 * t;
  const Real l2 = square(l), l3 = l2 * l;
  const Real lt = l * t;
  const Real ln2 = log(Real(2));
  // t^{k/2}
  auto th = [&](long k) { return pow(st, k); };

  AsymptoticSeries s;
  s.kind = kind;
  s.lambda = l;
  s.t = t;
  TermList L;

  switch (kind) {
    case SeriesKind::endpoint_b2: {
      L.add(Real(1), Real(2));
      L.add(Real(0), 2 * l);
      L.add(q(-1, 2), -s2 * l / st);
      L.add(q(-3, 2), l * (2 * lt + 1) / (2 * s2 * th(3)));
      L.add(Real(-2), -l2 / (2 * t));
      L.add(q(-5, 2), -3 * l * square(2 * lt + 1) / (16 * s2 * th(5)));
      L.add(Real(-3), l2 * (2 * lt + 1) / (2 * t2));
      L.add(q(-7, 2), 5 * l * (8 * l3 * t3 + 4 * l2 * t2 + 6 * lt + 1) / (64 * s2 * th(7)));
      L.add(Real(-4), -3 * l2 * square(2 * lt + 1) / (8 * t3));
      L.add(q(-9, 2), -35 * l * (4 * l2 * t2 - 1) * (4 * l2 * t2 - 8 * lt - 1) / (1024 * s2 * th(9)));
      L.add(Real(-5), l2 * (4 * lt + 1) * (2 * l2 * t2 + 2 * lt + 1) / (4 * t4));
      L.add(q(-11, 2),
            63 * l * square(2 * lt + 1) * (8 * l3 * t3 - 68 * l2 * t2 + 6 * lt + 1) / (4096 * s2 * th(11)));
      s.remainder_power = Real(-6);
      break;
    }
    case SeriesKind::lagrange_A: {
      // n(1 + ln(2/n)) + lambda ln(2/(n t))
      L.add_log(Real(1), Real(-1));
      L.add(Real(1), 1 + ln2);
      L.add_log(Real(0), -l);
      L.add(Real(0), l * log(2 / t));
      L.add(q(-1, 2), -s2 * l / st);
      L.add(Real(-1), -l2 / 2);
      L.add(q(-3, 2), l * (1 + 6 * lt) / (6 * s2 * th(3)));
      L.add(Real(-2), l2 * (2 * lt - 3) / (12 * t));
      L.add(q(-5, 2), -l * (20 * lt * (3 * lt + 1) + 3) / (80 * s2 * th(5)));
      L.add(Real(-3), l2 * (3 - 2 * lt * (lt - 6)) / (24 * t2));
      s.remainder_power = q(-7, 2);
      break;
    }
    case SeriesKind::free_energy_F: {
      L.add_log(Real(2), q(-1, 2));
      L.add_log(Real(1), -l);
      L.add_log(Real(0), -l2 / 2);
      L.add(Real(2), q(3, 4) + ln2 / 2);
      L.add(Real(1), l * (1 + log(2 / t)));
      L.add(q(1, 2), -2 * s2 * l / st);
      L.add(Real(0), l * (2 + lt * log(8 / t)) / (2 * t));
      L.add(q(-1, 2), -l * (6 * lt + 1) / (3 * s2 * th(3)));
      L.add(Real(-1), -l2 * (2 * lt - 3) / (12 * t));
      L.add(q(-3, 2), l * (20 * lt * (3 * lt + 1) + 3) / (120 * s2 * th(5)));
      L.add(Real(-2), l2 * (2 * l2 * t2 - 12 * lt - 3) / (48 * t2));
      s.remainder_power = q(-5, 2);
      break;
    }
    case SeriesKind::beta: {
      L.add(Real(1), q(1, 2));
      L.add(Real(0), l / 2);
      L.add(q(-1, 2), -l / (2 * s2 * st));
      L.add(Real(-1), Real(0));
      L.add(q(-3, 2), l * (2 * lt + 1) / (8 * s2 * th(3)));
      L.add(Real(-2), -l2 / (8 * t));
      L.add(q(-5, 2), -l * ((12 * l2 - 5) * t2 + 12 * lt + 3) / (64 * s2 * th(5)));
      L.add(Real(-3), l2 * (2 * lt + 1) / (8 * t2));
      L.add(q(-7, 2), 5 * l * (2 * l * (4 * l2 - 5) * t3 + (4 * l2 - 7) * t2 + 6 * lt + 1) / (256 * s2 * th(7)));
      s.remainder_power = Real(-4);
      break;
    }
    case SeriesKind::p_coeff: {
      L.add(Real(2), q(-1, 4));
      L.add(Real(1), (1 - 2 * l) / 4);
      L.add(q(1, 2), l / (s2 * st));
      L.add(Real(0), l * ((1 - l) * t - 2) / (4 * t));
      L.add(q(-1, 2), l * ((2 * l - 1) * t + 1) / (4 * s2 * th(3)));
      L.add(Real(-1), -l2 / (8 * t));
      L.add(q(-3, 2), l * ((1 + 4 * l - 4 * l2) * t2 + 2 * (1 - 2 * l) * t - 1) / (32 * s2 * th(5)));
      L.add(Real(-2), l2 * ((2 * l - 1) * t + 1) / (16 * t2));
      L.add(q(-5, 2),
            l * ((2 * l - 1) * (4 * l2 - 4 * l - 5) * t3 + (4 * l2 - 12 * l - 5) * t2 + 3 * (2 * l - 1) * t + 1) /
                (128 * s2 * th(7)));
      s.remainder_power = Real(-3);
      break;
    }
    case SeriesKind::H: {
      L.add(q(1, 2), -2 * l * s2 * st);
      L.add(Real(0), l * (lt + 2));
      L.add(q(-1, 2), -l * (2 * lt + 1) / (s2 * st));
      L.add(Real(-1), l2 / 2);
      L.add(q(-3, 2), l * ((4 * l2 - 1) * t2 + 4 * lt + 1) / (8 * s2 * th(3)));
      L.add(Real(-2), -l2 * (2 * lt + 1) / (4 * t));
      L.add(q(-5, 2), -l * (2 * l * (4 * l2 - 3) * t3 + (4 * l2 - 5) * t2 + 6 * lt + 1) / (32 * s2 * th(5)));
      s.remainder_power = Real(-3);
      break;
    }
    case SeriesKind::logD: {
      if (!constants) throw DomainError("logD series needs the constants c1~, c0~");
      s.constants = constants;
      L.add_log(Real(2), q(1, 2));
      L.add_log(Real(1), l);
      L.add_log(Real(0), l2 / 2 - q(1, 12));
      L.add(Real(2), -(q(3, 4) + ln2 / 2));
      L.add(Real(1), l * log(t) + constants->c1);
      L.add(q(1, 2), 2 * s2 * l / st);
      L.add(Real(0), -l / t + l2 / 2 * log(t) + constants->c0);
      L.add(q(-1, 2), l * (6 * lt + 1) / (3 * s2 * th(3)));
      L.add(Real(-1), -l * (3 * l + (1 - 2 * l2) * t) / (12 * t));
      L.add(q(-3, 2), -l * (15 * (4 * l2 - 1) * t2 + 20 * lt + 3) / (120 * s2 * th(5)));
      s.remainder_power = Real(-2);
      break;
    }
  }
  s.terms = std::move(L.terms);
  return s;
}

Real series_eval(SeriesKind kind, const Real& n, const WeightParams& params,
                 const std::optional<SeriesConstants>& constants) {
  return make_series(kind, params, constants).evaluate(n);
}

SeriesConstants gaussian_constants() {
  return {log(2 * pi()),
          Real("-0.16542114370045092921391966024278064276403638033520178366652230635735969966657717")};
}

}  // namespace pgw
