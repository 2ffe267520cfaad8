#include "qsum/rational.hpp"

#include <cstddef>
#include <utility>

namespace qsum {

Rat::Rat(long n, long d) {
  if (d == 0) throw DomainError("Rat: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw DomainError("Rat: zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw DomainError("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw DomainError("Rat: cannot parse '" + text + "'");
  if (sgn(v.get_den()) == 0) throw DomainError("Rat: zero denominator in '" + text + "'");
  v.canonicalize();
  return Rat(std::move(v));
}

Rat Rat::abs() const {
  return sgn(v_) < 0 ? Rat(mpq_class(-v_)) : *this;
}

Rat Rat::pow_int(long e) const {
  if (e == 0) return Rat(1);
  if (is_zero()) {
    if (e < 0) throw DomainError("Rat: zero base with negative exponent");
    return Rat(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  return e > 0 ? Rat(num, den) : Rat(den, num);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw DomainError("Rat: division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat& Rat::operator/=(const Rat& b) {
  if (b.is_zero()) throw DomainError("Rat: division by zero");
  v_ /= b.v_;
  return *this;
}

Rat pow_int(const Rat& base, long e) { return base.pow_int(e); }

Rat exact_det(const RatMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DimensionError("exact_det: empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionError("exact_det: matrix is not square");
  }
  if (n == 1) return m[0][0];

  RatMatrix a(m);
  int sign = 1;
  Rat prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return Rat(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    // Bareiss step: exact division by the previous pivot.
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = Rat(0);
    }
    prev = a[k][k];
  }
  Rat det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace qsum
