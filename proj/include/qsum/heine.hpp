#pragma once

#include "qsum/real.hpp"

namespace qsum {

// Parameters of the basic hypergeometric series
//   2phi1(alpha, beta, gamma; q, tau) =
//       sum_n (alpha;q)_n (beta;q)_n / ((gamma;q)_n (q;q)_n) tau^n.
struct Phi21Params {
  Real alpha;
  Real beta;
  Real gamma;
  Real q;
  Real tau;
};

// Direct evaluation for |q| < 1, |tau| < 1.  Truncates once five consecutive
// terms fall below 10^-(P+10).  A vanishing denominator factor is a pole.
Real phi21(const Phi21Params& p, int precision);

struct HeineTransformed {
  Real prefactor;
  Phi21Params params;
};

/*
 * The five Heine transformation relations:
 *   phi21(p) = prefactor * phi21(p')
 * where the prefactor is a ratio of four infinite q-Pochhammer products and
 * p' is the rearranged parameter tuple.  k selects the relation (1..5); the
 * transformed argument must have modulus < 1, otherwise the relation is
 * reported inapplicable.
 */
HeineTransformed heine_transform(int k, const Phi21Params& p);

// Ratio-form side of the Rogers-Fine identity:
//   sum_n (xq; q^2)_n / (xq^2; q^2)_n (xq)^n  =  sum_n x^n q^{n(n+1)/2}.
// Requires |q| < 1 and |xq| < 1.
Real rogers_fine_rhs(const Real& x, const Real& q, int precision);

// Power-series side of the same identity (independent evaluation route).
Real rogers_fine_lhs(const Real& x, const Real& q, int precision);

// The (a, b)-substituted generalization, a >= 1, b >= 0:
//   sum_n x^n q^{a n(n+1)/2 - n b}
//     = sum_n x^n q^{(a-b)n} (x q^{a-b}; q^{2a})_n / (x q^{2a-b}; q^{2a})_n.
// With a = rho-2, b = rho-3, x = -1 the right side is the ratio form of the
// rho-gonal series.
Real rogers_fine_general(long a, long b, const Real& x, const Real& q, int precision);
Real rogers_fine_lhs_general(long a, long b, const Real& x, const Real& q, int precision);

// Ramanujan's G function and its companion:
//   G(a, lambda; b, q)    = 1 + sum_{n>=1} q^{n(n+1)/2}/(q;q)_n
//                             * prod_{j<n}(a + lambda q^j) / prod_{j=1..n}(1 + b q^j)
//   G(aq, lambda q; b, q) = same with exponent n(n+3)/2.
struct GParams {
  Real a;
  Real lambda;
  Real b;
  Real q;
};

Real g0(const GParams& gp, int precision);
Real g1(const GParams& gp, int precision);

// Alternating closed form of the second family for 0 < q < 1:
//   sum_n (-1)^n q^{n(kappa n + 4 - kappa)/2} / (q; q^kappa)_{n+1}.
Real s2_closed_form(long kappa, const Real& q, int precision);

}  // namespace qsum
