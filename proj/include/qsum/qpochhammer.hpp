#pragma once

#include <gmpxx.h>

#include "qsum/rational.hpp"
#include "qsum/real.hpp"

namespace qsum {

// Finite q-Pochhammer symbol (alpha; q)_n = prod_{k=0}^{n-1} (1 - alpha q^k),
// with (alpha; q)_0 = 1.
Real qpoch(const Real& alpha, const Real& q, long n);
Rat qpoch_rat(const Rat& alpha, const Rat& q, long n);

// Infinite product (alpha; q)_inf = prod_{n>=0} (1 - alpha q^n), |q| < 1.
// Truncated once |alpha q^n| < 10^-(P+10); relative error <= 10^-P.
Real qpoch_inf(const Real& alpha, const Real& q);

// Exponent of the rho-gonal number series: n[(rho-2)n - (rho-4)]/2.
// Always a nonnegative integer for rho >= 3, n >= 0.
mpz_class polygonal_exponent(long rho, long n);

// Validated series parameter: q > 0 and bounded away from the singular q = 1,
// with the reciprocal p = 1/q attached.
struct QParam {
  Real q;
  Real p;

  static QParam make(const Real& q);
};

}  // namespace qsum
