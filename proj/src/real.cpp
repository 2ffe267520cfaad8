#include "qsum/real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qsum {

namespace {
constexpr double kLog2Of10 = 3.32192809488736234787;
}

int Real::checked_digits(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits) {
    throw DomainError("Real: precision must be between 30 and 200 decimal digits");
  }
  return digits;
}

mpfr_prec_t Real::bits_for(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10));
}

Real::Real(int digits) : digits_(checked_digits(digits)) {
  mpfr_init2(v_, bits_for(digits_));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  v_[0] = other.v_[0];
  mpfr_init2(other.v_, MPFR_PREC_MIN);
  mpfr_set_zero(other.v_, 1);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(long v, int digits) {
  Real r(digits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(double v, int digits) {
  Real r(digits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& text, int digits) {
  Real r(digits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("Real: cannot parse '" + text + "'");
  }
  return r;
}

Real Real::from_rat(const Rat& r, int digits) {
  Real x(digits);
  mpfr_set_q(x.v_, r.mpq().get_mpq_t(), MPFR_RNDN);
  return x;
}

Real Real::pow10(long e, int digits) {
  Real ten = Real::of(10, digits);
  return ten.pow_int(e);
}

Real Real::mul_pow2(long k) const {
  Real r(*this);
  mpfr_mul_2si(r.v_, r.v_, k, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(*this);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow_int(long e) const {
  Real r(digits_);
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

Real Real::pow_z(const mpz_class& e) const {
  Real r(digits_);
  mpfr_pow_z(r.v_, v_, e.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::string Real::fixed(int frac_digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", frac_digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Real::sci(int sig_digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", sig_digits > 0 ? sig_digits - 1 : 0, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
inline int wider(const Real& a, const Real& b) { return std::max(a.digits(), b.digits()); }
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.digits());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.digits());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.digits());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.digits());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b) {
  Real r(b.digits());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b) {
  Real r(b.digits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& b) { return *this = *this + b; }
Real& Real::operator-=(const Real& b) { return *this = *this - b; }
Real& Real::operator*=(const Real& b) { return *this = *this * b; }
Real& Real::operator/=(const Real& b) { return *this = *this / b; }

Real abs(const Real& x) { return x.abs(); }
Real pow_int(const Real& base, long e) { return base.pow_int(e); }

Real real_from_rat(const Rat& r, int digits) { return Real::from_rat(r, digits); }

bool approx_equal(const Real& a, const Real& b, const Real& tol) {
  if (!(tol > Real::of(0L, tol.digits()))) throw DomainError("approx_equal: tol must be positive");
  return (a - b).abs() <= tol;
}

}  // namespace qsum
