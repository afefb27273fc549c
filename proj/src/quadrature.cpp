#include "pgw/quadrature.hpp"

#include <utility>
#include <vector>

#include "pgw/errors.hpp"

namespace pgw {

namespace {

// Scan step and stopping rule for the truncation window. The window is found
// once on the coarse grid and kept for every refinement level.
constexpr long kScanStepLog2 = 3;  // scan with h = 1/8
constexpr long kMaxScanSteps = 8 * 12;

struct Node {
  Real x;
  Real weight;
  bool valid = false;
};

class Transform {
 public:
  explicit Transform(const Domain& d) : d_(d), half_pi_(pi() / 2) {
    if (d_.kind == Domain::Kind::finite) half_width_ = (d_.upper - d_.lower) / 2;
  }

  Node at(const Real& u) const {
    if (d_.kind == Domain::Kind::real_line && u.sign() < 0) {
      // mirrored exactly so odd integrands cancel pairwise
      Node n = at(-u);
      n.x = -n.x;
      return n;
    }
    Node n;
    // sinh/cosh from a single exponential in both the outer and inner layer.
    const Real eu = exp(u);
    const Real inv_eu = 1 / eu;
    const Real cosh_u = (eu + inv_eu) / 2;
    const Real v = half_pi_ * (eu - inv_eu) / 2;
    switch (d_.kind) {
      case Domain::Kind::finite: {
        // 1 - tanh|v| computed without cancellation; x is formed from the
        // nearer endpoint so singular integrands stay resolvable.
        const Real e2 = exp(-2 * abs(v));
        if (e2.is_zero()) return n;
        const Real q = 2 * e2 / (1 + e2);
        const Real offset = half_width_ * q;
        n.x = u.sign() < 0 ? d_.lower + offset : d_.upper - offset;
        if (n.x == d_.lower || n.x == d_.upper) return n;
        // 1/cosh^2 v = 4 e^{-2|v|} / (1 + e^{-2|v|})^2
        n.weight = half_width_ * half_pi_ * cosh_u * 4 * e2 / square(1 + e2);
        break;
      }
      case Domain::Kind::half_line: {
        const Real e = exp(v);
        if (e.is_zero() || !e.is_finite()) return n;
        n.x = d_.lower + e;
        if (n.x == d_.lower) return n;
        n.weight = e * half_pi_ * cosh_u;
        break;
      }
      case Domain::Kind::real_line: {
        const Real ev = exp(v);
        if (ev.is_zero() || !ev.is_finite()) return n;
        const Real inv_ev = 1 / ev;
        n.x = (ev - inv_ev) / 2;
        n.weight = (ev + inv_ev) / 2 * half_pi_ * cosh_u;
        break;
      }
    }
    n.valid = n.weight.is_finite() && !n.weight.is_zero();
    return n;
  }

  bool symmetric() const { return d_.kind == Domain::Kind::real_line; }

 private:
  const Domain& d_;
  Real half_pi_;
  Real half_width_;
};

struct Sampler {
  const Integrand& f;
  const Transform& tr;
  long evaluations = 0;

  // w(u)·f(x(u)); zero when the node degenerates (underflow, endpoint).
  Real term(const Real& u) {
    Node n = tr.at(u);
    if (!n.valid) return Real(0);
    ++evaluations;
    Real v = f(n.x) * n.weight;
    if (!v.is_finite()) {
      throw ConvergenceError("quadrature: non-finite integrand value at x = " + n.x.str(20));
    }
    return v;
  }
};

// Walk from u = 0 in direction `dir` until the terms have decayed below
// eps relative to the largest term seen and are still decreasing.
Real scan_limit(Sampler& s, int dir, const Real& h, const Real& eps, const Real& centre_term) {
  Real largest = abs(centre_term);
  Real previous = abs(centre_term);
  Real u(0);
  for (long k = 1; k <= kMaxScanSteps; ++k) {
    u = h * (dir * k);
    const Real t = abs(s.term(u));
    if (t > largest) largest = t;
    if (t.is_zero() && k > 1) return u;
    if (t <= eps * largest && t <= previous) return u;
    previous = t;
  }
  return u;
}

}  // namespace

Domain Domain::finite(const Real& a, const Real& b) {
  if (!(a < b)) throw DomainError("finite domain requires lower < upper");
  Domain d;
  d.kind = Kind::finite;
  d.lower = a;
  d.upper = b;
  return d;
}

Domain Domain::half_line(const Real& a) {
  Domain d;
  d.kind = Kind::half_line;
  d.lower = a;
  return d;
}

Domain Domain::real_line() { return Domain{}; }

QuadratureResult integrate_detailed(const Integrand& f, const Domain& domain, const NumericContext& ctx) {
  ContextScope scope(ctx);
  Transform tr(domain);
  Sampler s{f, tr};

  const Real tol = Real(ctx.quad_rel_tol);
  const Real eps = tol * Real(1e-6);
  const Real h0 = ldexp(Real(1), -kScanStepLog2);

  const Real centre = s.term(Real(0));
  Real u_lo = scan_limit(s, -1, h0, eps, centre);
  Real u_hi = scan_limit(s, +1, h0, eps, centre);
  if (tr.symmetric()) {
    u_hi = max(abs(u_lo), u_hi);
    u_lo = -u_hi;
  }

  // Level 0 uses the scan spacing; each level halves the step and adds the
  // odd multiples of the new step inside the window.
  Real sum = centre;
  Real abs_sum = abs(centre);
  auto accumulate = [&](const Real& step, long first, long stride) {
    for (long k = first;; k += stride) {
      const Real u = step * k;
      const bool in_hi = u <= u_hi;
      const bool in_lo = -u >= u_lo;
      if (!in_hi && !in_lo) break;
      if (tr.symmetric()) {
        Real pair = s.term(u) + s.term(-u);
        abs_sum += abs(pair);
        sum += pair;
        continue;
      }
      if (in_hi) {
        Real t = s.term(u);
        abs_sum += abs(t);
        sum += t;
      }
      if (in_lo) {
        Real t = s.term(-u);
        abs_sum += abs(t);
        sum += t;
      }
    }
  };

  accumulate(h0, 1, 1);
  Real step = h0;
  Real estimate = sum * step;

  QuadratureResult result;
  for (int level = 1; level <= kMaxQuadratureLevel; ++level) {
    step = ldexp(step, -1);
    accumulate(step, 1, 2);
    Real refined = sum * step;
    Real diff = abs(refined - estimate);
    Real scale = abs(refined);
    if (scale.is_zero()) scale = abs_sum * step;
    estimate = std::move(refined);
    if (level >= 2 && diff <= tol * scale) {
      result.value = estimate;
      result.error_estimate = diff;
      result.level = level;
      result.evaluations = s.evaluations;
      return result;
    }
  }
  throw ConvergenceError("quadrature did not converge after " + std::to_string(kMaxQuadratureLevel) +
                         " refinement levels");
}

Real integrate(const Integrand& f, const Domain& domain, const NumericContext& ctx) {
  return integrate_detailed(f, domain, ctx).value;
}

}  // namespace pgw
