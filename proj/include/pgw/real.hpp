#ifndef PGW_REAL_HPP
#define PGW_REAL_HPP

#include <mpfr.h>

#include <string>
#include <string_view>

namespace pgw {

// Binary floating-point real of configurable mantissa, backed by MPFR.
//
// Every value carries its own precision. Values produced by arithmetic or by
// conversion from integers/doubles/strings take the current thread's working
// precision (see WorkingPrecision); copies keep the precision of the source.
// Rounding is always to nearest.
class Real {
 public:
  Real();
  Real(int v);            // NOLINT(google-explicit-constructor)
  Real(long v);           // NOLINT(google-explicit-constructor)
  Real(unsigned long v);  // NOLINT(google-explicit-constructor)
  Real(long long v);      // NOLINT(google-explicit-constructor)
  explicit Real(double v);
  explicit Real(std::string_view decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  // Shortest decimal string that reads back to the same binary value at this
  // value's precision, in the form [-]d.ddd…e±x.
  std::string str() const;
  // Decimal string with a fixed number of significant digits.
  std::string str(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  // Round in place to the given precision.
  void round_to(long bits);

 private:
  mpfr_t value_;
};

// Thread-local working precision in bits (default 512). RAII guard.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(long bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  static long current();

 private:
  long previous_;
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

Real operator+(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator/(long a, const Real& b);

inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator+(int a, const Real& b) { return static_cast<long>(a) + b; }
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator*(int a, const Real& b) { return static_cast<long>(a) * b; }
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

int compare(const Real& a, const Real& b);
int compare(const Real& a, long b);

inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return compare(a, b) != 0; }
inline bool operator<(const Real& a, long b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, long b) { return compare(a, b) > 0; }
inline bool operator<=(const Real& a, long b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real& a, long b) { return compare(a, b) >= 0; }
inline bool operator==(const Real& a, long b) { return compare(a, b) == 0; }
inline bool operator!=(const Real& a, long b) { return compare(a, b) != 0; }
inline bool operator<(const Real& a, int b) { return compare(a, long{b}) < 0; }
inline bool operator>(const Real& a, int b) { return compare(a, long{b}) > 0; }
inline bool operator<=(const Real& a, int b) { return compare(a, long{b}) <= 0; }
inline bool operator>=(const Real& a, int b) { return compare(a, long{b}) >= 0; }
inline bool operator==(const Real& a, int b) { return compare(a, long{b}) == 0; }
inline bool operator!=(const Real& a, int b) { return compare(a, long{b}) != 0; }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real square(const Real& x);
Real ldexp(const Real& x, long k);  // x·2^k
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real pi();
Real ln2();
Real euler_gamma();

// acc -= a·b, rounding once.
void sub_product(Real& acc, const Real& a, const Real& b);

// 2^(-bits) at the working precision.
Real epsilon_for(long bits);

}  // namespace pgw

#endif  // PGW_REAL_HPP
