#include "pgw/fit.hpp"

#include <algorithm>

#include "pgw/errors.hpp"

namespace pgw {

namespace {

// Gaussian elimination with partial pivoting; m is k x (k+1).
std::vector<Real> solve(std::vector<std::vector<Real>> m) {
  const size_t k = m.size();
  for (size_t c = 0; c < k; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < k; ++r) {
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    }
    std::swap(m[c], m[piv]);
    if (m[c][c].is_zero()) throw PrecisionError("singular fit system", static_cast<long>(c));
    for (size_t r = c + 1; r < k; ++r) {
      const Real f = m[r][c] / m[c][c];
      for (size_t j = c; j <= k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<Real> x(k);
  for (size_t i = k; i-- > 0;) {
    Real s = m[i][k];
    for (size_t j = i + 1; j < k; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return x;
}

// (c1, c0) from exact interpolation on the given points.
std::pair<Real, Real> interpolate(const std::vector<long>& grid, const std::vector<Real>& g) {
  const size_t k = grid.size();
  const Real scale(grid.back());
  std::vector<std::vector<Real>> m(k, std::vector<Real>(k + 1));
  for (size_t i = 0; i < k; ++i) {
    const Real x = Real(grid[i]) / scale;
    m[i][0] = x;
    m[i][1] = Real(1);
    for (size_t j = 2; j < k; ++j) m[i][j] = pow(x, -Real(static_cast<long>(j) + 2) / 2);
    m[i][k] = g[i];
  }
  const auto sol = solve(std::move(m));
  return {sol[0] / scale, sol[1]};
}

}  // namespace

std::vector<long> default_fit_grid(long nmax, long points, long step) {
  std::vector<long> grid;
  for (long i = points - 1; i >= 0; --i) {
    const long n = nmax - i * step;
    if (n >= 2) grid.push_back(n);
  }
  return grid;
}

FitResult fit_constants_from_table(const OrthoTable& table, const std::vector<long>& n_grid) {
  if (n_grid.size() < 3) throw DomainError("constant fit needs at least 3 grid points");
  if (!std::is_sorted(n_grid.begin(), n_grid.end()) ||
      std::adjacent_find(n_grid.begin(), n_grid.end()) != n_grid.end()) {
    throw DomainError("constant fit grid must be strictly ascending");
  }
  if (n_grid.front() < 1 || n_grid.back() > table.N) throw DomainError("constant fit grid outside the table");
  WorkingPrecision wp(table.precision_bits);

  const auto known = make_series(SeriesKind::logD, table.params, SeriesConstants{Real(0), Real(0)});
  std::vector<Real> g;
  for (long n : n_grid) g.push_back(table.logD[static_cast<size_t>(n)] - known.evaluate(Real(n)));

  const auto full = interpolate(n_grid, g);
  const std::vector<long> tail_grid(n_grid.begin() + 1, n_grid.end());
  const std::vector<Real> tail_g(g.begin() + 1, g.end());
  const auto coarse = interpolate(tail_grid, tail_g);

  FitResult r;
  r.lambda = table.params.lambda;
  r.t = table.params.t;
  r.n_grid = n_grid;
  r.c1 = full.first;
  r.c0 = full.second;
  r.c1_error = abs(full.first - coarse.first);
  r.c0_error = abs(full.second - coarse.second);
  return r;
}

FitResult fit_constants(const Real& lambda, const Real& t, const std::vector<long>& n_grid,
                        const NumericContext& ctx) {
  if (n_grid.empty()) throw DomainError("constant fit needs at least 3 grid points");
  const WeightParams params(t, lambda);
  params.validate();
  params.require_one_cut();
  const long nmax = *std::max_element(n_grid.begin(), n_grid.end());
  NumericContext wide = ctx;
  if (precision_for_degree(nmax) > ctx.precision_bits) wide = NumericContext::for_degree(nmax);
  ContextScope scope(wide);
  const OrthoTable table = build_ortho_table(nmax, params, wide);
  return fit_constants_from_table(table, n_grid);
}

}  // namespace pgw
