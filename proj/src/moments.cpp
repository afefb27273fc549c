#include "pgw/moments.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "pgw/errors.hpp"
#include "pgw/linalg.hpp"
#include "pgw/quadrature.hpp"
#include "pgw/special.hpp"

namespace pgw {

namespace {

// Seeds are computed this many bits above the working precision so the table
// is smooth in t to full precision (finite differences in t rely on it).
constexpr long kSeedGuardBits = 128;
constexpr long kRecurrenceGuardBits = 64;
constexpr long kRetryBits = 128;
constexpr size_t kCacheCapacity = 512;

using CacheKey = std::tuple<std::string, std::string, long, long>;

struct MomentCache {
  std::mutex mutex;
  std::map<CacheKey, std::shared_ptr<const MomentTable>> entries;
  std::deque<CacheKey> order;
};

MomentCache& cache() {
  static MomentCache c;
  return c;
}

Real relative_difference(const Real& a, const Real& b) {
  if (b.is_zero()) return abs(a);
  return abs(a - b) / abs(b);
}

std::vector<Real> seeded_table(long m, const WeightParams& params, long bits) {
  const auto seed_ctx = NumericContext::with_precision(bits + kSeedGuardBits);
  const Real mu0 = moment(0, params, seed_ctx);
  const Real mu2 = moment(2, params, seed_ctx);
  std::vector<Real> mu;
  {
    WorkingPrecision wp(bits + kRecurrenceGuardBits);
    mu = pearson_recurrence(m, mu0, mu2, params);
  }
  for (auto& v : mu) v.round_to(bits);
  return mu;
}

// Index list {0, 2⌊m/2⌋, 2m} without duplicates.
std::vector<long> certification_indices(long m) {
  std::vector<long> idx{0};
  if (m / 2 > 0) idx.push_back(2 * (m / 2));
  if (m > m / 2) idx.push_back(2 * m);
  return idx;
}

bool certify(const std::vector<Real>& mu, const std::vector<long>& idx, const std::vector<Real>& reference,
             const Real& threshold) {
  for (size_t i = 0; i < idx.size(); ++i) {
    if (relative_difference(mu[static_cast<size_t>(idx[i])], reference[i]) > threshold) return false;
  }
  return true;
}

}  // namespace

WeightParams::WeightParams(const Real& t_, const Real& lambda_) : t(t_), lambda(lambda_) {}

bool WeightParams::one_cut() const { return lambda * t <= 1; }

void WeightParams::validate() const {
  if (!(t > 0)) throw DomainError("weight parameter t > 0 violated");
  if (!lambda.is_finite()) throw DomainError("weight parameter lambda must be finite");
}

void WeightParams::require_one_cut() const {
  validate();
  if (!one_cut()) throw OneCutError("one-cut condition lambda*t <= 1 violated");
}

Real moment(long j, const WeightParams& params, const NumericContext& ctx) {
  params.validate();
  if (j < 0) throw DomainError("moment index must be non-negative");
  ContextScope scope(ctx);
  if (j % 2 != 0) return Real(0);
  const Real a = Real(j + 1) / 2;
  const Real b = Real(j + 3) / 2 + params.lambda;
  const Real z = 1 / params.t;
  return pow(params.t, -a) * gamma(a, ctx) * kummer_u(a, b, z, ctx);
}

Real moment_quadrature(long j, const WeightParams& params, const NumericContext& ctx) {
  params.validate();
  if (j < 0) throw DomainError("moment index must be non-negative");
  ContextScope scope(ctx);
  const Real& t = params.t;
  const Real& lambda = params.lambda;
  auto f = [&](const Real& x) {
    if (x.is_zero()) return j == 0 ? Real(1) : Real(0);
    const Real x2 = square(x);
    Real v = exp(j * log(abs(x)) - x2 + lambda * log1p(t * x2));
    if (x.sign() < 0 && j % 2 != 0) v = -v;
    return v;
  };
  return integrate(f, Domain::real_line(), ctx);
}

std::vector<Real> pearson_recurrence(long m, const Real& mu0, const Real& mu2, const WeightParams& params) {
  if (m < 0) throw DomainError("moment table size must be non-negative");
  std::vector<Real> mu(static_cast<size_t>(2 * m + 1), Real(0));
  mu[0] = mu0;
  if (m >= 1) mu[2] = mu2;
  const Real& t = params.t;
  const Real two_t = 2 * t;
  for (long k = 0; k + 2 <= m; ++k) {
    const Real c = (2 * params.lambda + (2 * k + 3)) * t - 2;
    mu[static_cast<size_t>(2 * k + 4)] =
        (c * mu[static_cast<size_t>(2 * k + 2)] + (2 * k + 1) * mu[static_cast<size_t>(2 * k)]) / two_t;
  }
  return mu;
}

std::shared_ptr<const MomentTable> moment_table_recurrence(long m, const WeightParams& params,
                                                           const NumericContext& ctx) {
  params.validate();
  if (m < 0) throw DomainError("moment table size must be non-negative");
  CacheKey key{params.t.str(), params.lambda.str(), m, ctx.precision_bits};
  {
    std::lock_guard<std::mutex> lock(cache().mutex);
    auto it = cache().entries.find(key);
    if (it != cache().entries.end()) return it->second;
  }

  ContextScope scope(ctx);
  const auto idx = certification_indices(m);
  std::vector<Real> reference;
  for (long j : idx) reference.push_back(moment(j, params, ctx));
  const Real threshold = 100 * ctx.quad_rel_tol;

  std::vector<Real> mu = seeded_table(m, params, ctx.precision_bits);
  if (!certify(mu, idx, reference, threshold)) {
    mu = seeded_table(m, params, ctx.precision_bits + kRetryBits);
    for (auto& v : mu) v.round_to(ctx.precision_bits);
    if (!certify(mu, idx, reference, threshold)) {
      throw PrecisionError("moment recurrence disagrees with the Kummer-U route beyond 100*quad_rel_tol", 2 * m);
    }
  }

  auto table = std::make_shared<MomentTable>();
  table->params = params;
  table->m = m;
  table->mu = std::move(mu);

  std::lock_guard<std::mutex> lock(cache().mutex);
  auto [it, inserted] = cache().entries.emplace(key, table);
  if (inserted) {
    cache().order.push_back(key);
    if (cache().order.size() > kCacheCapacity) {
      cache().entries.erase(cache().order.front());
      cache().order.pop_front();
    }
  }
  return it->second;
}

void clear_moment_cache() {
  std::lock_guard<std::mutex> lock(cache().mutex);
  cache().entries.clear();
  cache().order.clear();
}

Real laguerre_moment(long j, const Real& alpha, const Real& ttilde, const Real& lambda, const NumericContext& ctx) {
  ContextScope scope(ctx);
  const Real a = j + alpha + 1;
  if (!(a > 0)) throw DomainError("laguerre_moment requires j + alpha + 1 > 0");
  if (!(ttilde > 0)) throw DomainError("laguerre_moment requires ttilde > 0");
  return pow(ttilde, a + lambda) * gamma(a, ctx) * kummer_u(a, a + lambda + 1, ttilde, ctx);
}

Real laguerre_moment_quadrature(long j, const Real& alpha, const Real& ttilde, const Real& lambda,
                                const NumericContext& ctx) {
  ContextScope scope(ctx);
  const Real e = j + alpha;
  if (!(e > -1)) throw DomainError("laguerre_moment requires j + alpha + 1 > 0");
  if (!(ttilde > 0)) throw DomainError("laguerre_moment requires ttilde > 0");
  auto f = [&](const Real& x) { return exp(e * log(x) - x + lambda * log(x + ttilde)); };
  return integrate(f, Domain::half_line(Real(0)), ctx);
}

std::vector<Real> laguerre_moment_table(long count, const Real& alpha, const Real& ttilde, const Real& lambda,
                                        const NumericContext& ctx) {
  if (count < 1) throw DomainError("laguerre moment table needs at least one entry");
  ContextScope scope(ctx);
  const Real threshold = 100 * ctx.quad_rel_tol;
  std::vector<long> idx{0};
  if ((count - 1) / 2 > 0) idx.push_back((count - 1) / 2);
  if (count - 1 > (count - 1) / 2) idx.push_back(count - 1);
  std::vector<Real> reference;
  for (long j : idx) reference.push_back(laguerre_moment(j, alpha, ttilde, lambda, ctx));

  auto build = [&](long bits) {
    const auto seed_ctx = NumericContext::with_precision(bits + kSeedGuardBits);
    std::vector<Real> nu;
    nu.push_back(laguerre_moment(0, alpha, ttilde, lambda, seed_ctx));
    if (count > 1) nu.push_back(laguerre_moment(1, alpha, ttilde, lambda, seed_ctx));
    {
      WorkingPrecision wp(bits + kRecurrenceGuardBits);
      for (long k = 0; k + 2 < count; ++k) {
        const Real c = k + alpha + lambda + 2 - ttilde;
        nu.push_back(c * nu[static_cast<size_t>(k + 1)] + ttilde * (k + alpha + 1) * nu[static_cast<size_t>(k)]);
      }
    }
    for (auto& v : nu) v.round_to(ctx.precision_bits);
    return nu;
  };

  std::vector<Real> nu = build(ctx.precision_bits);
  if (!certify(nu, idx, reference, threshold)) {
    nu = build(ctx.precision_bits + kRetryBits);
    if (!certify(nu, idx, reference, threshold)) {
      throw PrecisionError("Laguerre moment recurrence disagrees with the Kummer-U route", count - 1);
    }
  }
  return nu;
}

bool hankel_positive(const MomentTable& table, long order) {
  if (order > table.m) throw DomainError("hankel_positive: order exceeds table size");
  WorkingPrecision wp(table.mu.empty() ? WorkingPrecision::current() : table.mu.front().precision());
  try {
    ldl_hankel(table.mu, order + 1);
  } catch (const PrecisionError&) {
    return false;
  }
  return true;
}

}  // namespace pgw
