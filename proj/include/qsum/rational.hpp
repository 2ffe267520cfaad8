#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qsum/errors.hpp"

namespace qsum {

// Exact rational, kept normalized: denominator > 0 and gcd(|num|, den) = 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit so integer literals mix into expressions
  Rat(long n, long d);
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(mpq_class v);

  // Accepts "a/b", "a", with optional sign; base-10 only.
  static Rat parse(const std::string& text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rat abs() const;
  // Integer power; negative exponents invert (base must be nonzero).
  Rat pow_int(long e) const;

  std::string str() const { return v_.get_str(); }
  const mpq_class& mpq() const { return v_; }
  double to_double() const { return v_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);

  Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
  Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
  Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
  Rat& operator/=(const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

Rat pow_int(const Rat& base, long e);

using RatMatrix = std::vector<std::vector<Rat>>;

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Requires a square matrix of order >= 1.
Rat exact_det(const RatMatrix& m);

}  // namespace qsum
