#ifndef PGW_CONTEXT_HPP
#define PGW_CONTEXT_HPP

#include "pgw/real.hpp"

namespace pgw {

// Precision, quadrature target and finite-difference policy, threaded through
// every numeric operation.
struct NumericContext {
  long precision_bits = 512;
  Real quad_rel_tol;  // relative quadrature target
  Real fd_step;       // central-difference step
  int fd_order = 4;   // stencil accuracy order, 2 or 4

  // 512 bits, quadrature 1e-120, step 1e-25, fourth-order stencils.
  static NumericContext defaults();

  // Same policy scaled to `bits`: the quadrature target keeps 113 guard bits
  // below the working precision (1e-120 at 512 bits), the step is
  // 10^-floor(digits/6) (1e-25 at 512 bits).
  static NumericContext with_precision(long bits);

  // max(512, 64 + 16·N) bits: enough headroom for the Hankel moment matrix of
  // a degree-N orthogonal system.
  static NumericContext for_degree(long degree);

  // Throws ConfigError naming the violated invariant.
  void validate() const;

  NumericContext with_fd_step(const Real& step) const;
};

long precision_for_degree(long degree);

// Sets the thread's working precision to the context precision for the
// duration of an operation.
class ContextScope {
 public:
  explicit ContextScope(const NumericContext& ctx) : guard_(ctx.precision_bits) {}

 private:
  WorkingPrecision guard_;
};

}  // namespace pgw

#endif  // PGW_CONTEXT_HPP
