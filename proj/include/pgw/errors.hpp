#ifndef PGW_ERRORS_HPP
#define PGW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid NumericContext / run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Iterative procedure (quadrature refinement, Newton) failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Working precision was insufficient, e.g. a non-positive Cholesky pivot.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, long order) : Error(what), order_(order) {}
  long order() const { return order_; }

 private:
  long order_;
};

// Equilibrium operations require lambda·t <= 1.
class OneCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Change of variables undefined at the probe point (e.g. R_n ≡ 0 when lambda = 0).
class DegenerateTransformError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace pgw

#endif  // PGW_ERRORS_HPP
