#pragma once

#include <cstdio>

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "qsum/errors.hpp"
#include "qsum/rational.hpp"

namespace qsum {

/*
 * Arbitrary-precision real number.
 *
 * Precision is tracked in decimal digits P (30 <= P <= 200, default 50) and
 * mapped to ceil(P*log2(10)) bits of mantissa.  All arithmetic rounds to
 * nearest at the precision of the wider operand; formatting to k digits is
 * round-to-nearest as well.
 */
class Real {
 public:
  static constexpr int kMinDigits = 30;
  static constexpr int kMaxDigits = 200;
  static constexpr int kDefaultDigits = 50;

  explicit Real(int digits = kDefaultDigits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(long v, int digits = kDefaultDigits);
  static Real of(double v, int digits = kDefaultDigits);
  // Parses a base-10 decimal (with optional exponent), rounding to nearest.
  static Real parse(const std::string& text, int digits = kDefaultDigits);
  static Real from_rat(const Rat& r, int digits = kDefaultDigits);
  static Real pow10(long e, int digits = kDefaultDigits);

  int digits() const { return digits_; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  // Binary exponent of a nonzero value (|x| in [2^(e-1), 2^e)).
  long binary_exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }
  // Exact scaling by 2^k.
  Real mul_pow2(long k) const;

  Real abs() const;
  Real operator-() const;

  Real pow_int(long e) const;
  Real pow_z(const mpz_class& e) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Fixed-point rendering with `frac_digits` digits after the point.
  std::string fixed(int frac_digits) const;
  // Scientific rendering with `sig_digits` significant digits.
  std::string sci(int sig_digits) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t bits_for(int digits);
  static int checked_digits(int digits);

  mpfr_t v_;
  int digits_;
};

Real abs(const Real& x);
Real pow_int(const Real& base, long e);

// Real image of an exact rational at P decimal digits.
Real real_from_rat(const Rat& r, int digits);

// |a - b| <= tol, tol > 0.
bool approx_equal(const Real& a, const Real& b, const Real& tol);

}  // namespace qsum
