#include "pgw/linalg.hpp"

#include <string>

#include "pgw/errors.hpp"

namespace pgw {

LdlFactor ldl_hankel(const std::vector<Real>& seq, long size, long stride, long offset) {
  const auto entry = [&](long i, long j) -> const Real& { return seq.at(static_cast<size_t>(offset + stride * (i + j))); };

  LdlFactor f;
  f.pivots.resize(static_cast<size_t>(size));
  f.lower.resize(static_cast<size_t>(size));
  // scaled[i][k] = L[i][k]·d_k
  std::vector<std::vector<Real>> scaled(static_cast<size_t>(size));

  for (long j = 0; j < size; ++j) {
    auto& lj = f.lower[static_cast<size_t>(j)];
    auto& sj = scaled[static_cast<size_t>(j)];
    lj.resize(static_cast<size_t>(j));
    sj.resize(static_cast<size_t>(j));
    for (long i = 0; i < j; ++i) {
      const auto& li = f.lower[static_cast<size_t>(i)];
      Real acc = entry(j, i);
      for (long k = 0; k < i; ++k) sub_product(acc, sj[static_cast<size_t>(k)], li[static_cast<size_t>(k)]);
      sj[static_cast<size_t>(i)] = acc;
      lj[static_cast<size_t>(i)] = acc / f.pivots[static_cast<size_t>(i)];
    }
    Real d = entry(j, j);
    for (long k = 0; k < j; ++k) sub_product(d, sj[static_cast<size_t>(k)], lj[static_cast<size_t>(k)]);
    if (!(d > 0)) {
      throw PrecisionError("non-positive Cholesky pivot at order " + std::to_string(j) +
                               "; working precision insufficient",
                           j);
    }
    f.pivots[static_cast<size_t>(j)] = d;
  }
  return f;
}

}  // namespace pgw
