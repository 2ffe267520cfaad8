#include "qsum/qpochhammer.hpp"

#include <algorithm>

namespace qsum {

Real qpoch(const Real& alpha, const Real& q, long n) {
  if (n < 0) throw DomainError("qpoch: n must be nonnegative");
  const int P = std::max(alpha.digits(), q.digits());
  Real prod = Real::of(1L, P);
  Real aqk = alpha;  // alpha * q^k
  for (long k = 0; k < n; ++k) {
    prod *= (1L - aqk);
    aqk *= q;
  }
  return prod;
}

Rat qpoch_rat(const Rat& alpha, const Rat& q, long n) {
  if (n < 0) throw DomainError("qpoch_rat: n must be nonnegative");
  Rat prod(1);
  Rat aqk = alpha;
  for (long k = 0; k < n; ++k) {
    prod *= (Rat(1) - aqk);
    aqk *= q;
  }
  return prod;
}

Real qpoch_inf(const Real& alpha, const Real& q) {
  const int P = std::max(alpha.digits(), q.digits());
  const Real one = Real::of(1L, P);
  if (!(q.abs() < one)) throw DomainError("qpoch_inf: requires |q| < 1");
  const Real threshold = Real::pow10(-(P + 10), P);
  Real prod = one;
  Real aqn = alpha;
  long iter = 0;
  while (aqn.abs() >= threshold) {
    prod *= (1L - aqn);
    aqn *= q;
    if (++iter > 10000000L) throw BudgetError("qpoch_inf: product did not truncate");
  }
  return prod;
}

mpz_class polygonal_exponent(long rho, long n) {
  if (rho < 3) throw DomainError("polygonal_exponent: rho must be >= 3");
  if (n < 0) throw DomainError("polygonal_exponent: n must be nonnegative");
  const mpz_class nn(n);
  mpz_class e = nn * ((rho - 2) * nn - (rho - 4));
  // n[(rho-2)n - (rho-4)] is even for every rho >= 3, n >= 0.
  mpz_divexact_ui(e.get_mpz_t(), e.get_mpz_t(), 2);
  return e;
}

QParam QParam::make(const Real& q) {
  const int P = q.digits();
  const Real zero = Real::of(0L, P);
  const Real one = Real::of(1L, P);
  if (!(q > zero)) throw DomainError("QParam: q must be positive");
  if ((q - one).abs() <= Real::pow10(-(P - 5), P)) {
    throw SingularParameterError("QParam: q is too close to the singular point q = 1");
  }
  return QParam{q, one / q};
}

}  // namespace qsum
