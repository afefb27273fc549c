#include "pgw/real.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pgw {

namespace {

thread_local long g_working_bits = 512;

bool live(mpfr_srcptr x) { return x->_mpfr_d != nullptr; }

std::string format_digits(mpfr_srcptr x, std::size_t ndigits) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, ndigits, x, MPFR_RNDN);
  if (raw == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out.push_back('-');
    digits.erase(digits.begin());
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  out.push_back(digits.front());
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

}  // namespace

Real::Real() {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(unsigned long v) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_ui(value_, v, MPFR_RNDN);
}

Real::Real(long long v) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(value_, g_working_bits);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(std::string_view decimal) {
  mpfr_init2(value_, g_working_bits);
  std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal real: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (!live(value_)) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
  } else if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) std::swap(value_[0], other.value_[0]);
  return *this;
}

Real::~Real() {
  if (live(value_)) mpfr_clear(value_);
}

std::string Real::str() const {
  if (!mpfr_number_p(value_) || mpfr_zero_p(value_)) return format_digits(value_, 1);
  // Binary search for the fewest digits that still read back exactly.
  std::size_t lo = 1;
  std::size_t hi = mpfr_get_str_ndigits(10, mpfr_get_prec(value_));
  mpfr_t back;
  mpfr_init2(back, mpfr_get_prec(value_));
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    mpfr_set_str(back, format_digits(value_, mid).c_str(), 10, MPFR_RNDN);
    if (mpfr_equal_p(back, value_)) hi = mid;
    else lo = mid + 1;
  }
  mpfr_clear(back);
  return format_digits(value_, lo);
}

std::string Real::str(int digits) const {
  return format_digits(value_, static_cast<std::size_t>(digits < 1 ? 1 : digits));
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

void Real::round_to(long bits) { mpfr_prec_round(value_, bits, MPFR_RNDN); }

WorkingPrecision::WorkingPrecision(long bits) : previous_(g_working_bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
  g_working_bits = bits;
}

WorkingPrecision::~WorkingPrecision() { g_working_bits = previous_; }

long WorkingPrecision::current() { return g_working_bits; }

Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r;
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(const Real& a, long b) {
  Real r;
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r;
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r;
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real r;
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r;
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

int compare(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
int compare(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b); }

#define PGW_UNARY(name, fn)               \
  Real name(const Real& x) {              \
    Real r;                               \
    fn(r.raw(), x.raw(), MPFR_RNDN);      \
    return r;                             \
  }

PGW_UNARY(abs, mpfr_abs)
PGW_UNARY(sqrt, mpfr_sqrt)
PGW_UNARY(exp, mpfr_exp)
PGW_UNARY(log, mpfr_log)
PGW_UNARY(log1p, mpfr_log1p)
PGW_UNARY(sinh, mpfr_sinh)
PGW_UNARY(cosh, mpfr_cosh)
PGW_UNARY(tanh, mpfr_tanh)
PGW_UNARY(square, mpfr_sqr)

#undef PGW_UNARY

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long k) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long k) {
  Real r;
  mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? Real(b) : Real(a); }
Real min(const Real& a, const Real& b) { return b < a ? Real(b) : Real(a); }

Real pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real ln2() {
  Real r;
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

void sub_product(Real& acc, const Real& a, const Real& b) {
  mpfr_fms(acc.raw(), a.raw(), b.raw(), acc.raw(), MPFR_RNDN);
  mpfr_neg(acc.raw(), acc.raw(), MPFR_RNDN);
}

Real epsilon_for(long bits) { return ldexp(Real(1), -bits); }

}  // namespace pgw
