#include "qsum/heine.hpp"

#include <algorithm>

#include "qsum/qpochhammer.hpp"

namespace qsum {

namespace {

constexpr long kSeriesBudget = 1000000L;
constexpr int kQuietWindow = 5;  // consecutive sub-threshold terms before truncating

// Sums terms produced by `next` until five consecutive terms drop below
// 10^-(P+10).  q-series terms can dip before growing, hence the window.
template <class NextTerm>
Real windowed_sum(int P, NextTerm&& next) {
  const Real threshold = Real::pow10(-(P + 10), P);
  Real sum = Real::of(0L, P);
  int quiet = 0;
  for (long n = 0; n < kSeriesBudget; ++n) {
    const Real t = next(n);
    sum += t;
    if (t.abs() < threshold) {
      if (++quiet >= kQuietWindow) return sum;
    } else {
      quiet = 0;
    }
  }
  throw BudgetError("series did not truncate within the term budget");
}

void require_unit_disc(const Real& q, const Real& tau, int P) {
  const Real one = Real::of(1L, P);
  if (!(q.abs() < one)) throw DomainError("phi21: requires |q| < 1");
  if (!(tau.abs() < one)) throw DomainError("phi21: requires |tau| < 1");
}

}  // namespace

Real phi21(const Phi21Params& p, int precision) {
  const int P = precision;
  require_unit_disc(p.q, p.tau, P);

  // term_{n+1} = term_n * (1 - alpha q^n)(1 - beta q^n) /
  //                        ((1 - gamma q^n)(1 - q^{n+1})) * tau
  Real term = Real::of(1L, P);
  Real qn = Real::of(1L, P);  // q^n
  return windowed_sum(P, [&](long n) {
    if (n == 0) return term;
    const Real qprev = qn;  // q^{n-1}
    qn *= p.q;
    const Real dgamma = 1L - p.gamma * qprev;
    const Real dq = 1L - qn;
    if (dgamma.is_zero() || dq.is_zero()) {
      throw PoleError("phi21: denominator Pochhammer factor vanished at n = " + std::to_string(n));
    }
    term = term * (1L - p.alpha * qprev) * (1L - p.beta * qprev) / (dgamma * dq) * p.tau;
    return term;
  });
}

HeineTransformed heine_transform(int k, const Phi21Params& p) {
  const int P = std::max({p.alpha.digits(), p.beta.digits(), p.gamma.digits(), p.q.digits(),
                          p.tau.digits()});
  const Real one = Real::of(1L, P);
  const auto inapplicable = [](const std::string& why) -> HeineTransformed {
    throw InapplicableTransformError("heine_transform: " + why);
  };
  const auto ratio = [&](const Real& num1, const Real& num2, const Real& den1,
                         const Real& den2) {
    const Real d1 = qpoch_inf(den1, p.q);
    const Real d2 = qpoch_inf(den2, p.q);
    if (d1.is_zero() || d2.is_zero()) {
      throw PoleError("heine_transform: vanishing infinite product in the prefactor");
    }
    return qpoch_inf(num1, p.q) * qpoch_inf(num2, p.q) / (d1 * d2);
  };

  switch (k) {
    case 1: {
      if (!(p.beta.abs() < one)) inapplicable("relation 1 needs |beta| < 1");
      if (p.beta.is_zero()) inapplicable("relation 1 needs beta != 0");
      const Real at = p.alpha * p.tau;
      return HeineTransformed{ratio(p.beta, at, p.gamma, p.tau),
                              Phi21Params{p.gamma / p.beta, p.tau, at, p.q, p.beta}};
    }
    case 2: {
      if (p.beta.is_zero()) inapplicable("relation 2 needs beta != 0");
      if (p.gamma.is_zero()) inapplicable("relation 2 needs gamma != 0");
      const Real gb = p.gamma / p.beta;
      if (!(gb.abs() < one)) inapplicable("relation 2 needs |gamma/beta| < 1");
      const Real bt = p.beta * p.tau;
      return HeineTransformed{ratio(gb, bt, p.gamma, p.tau),
                              Phi21Params{p.alpha * bt / p.gamma, p.beta, bt, p.q, gb}};
    }
    case 3: {
      if (p.gamma.is_zero()) inapplicable("relation 3 needs gamma != 0");
      if (p.alpha.is_zero() || p.beta.is_zero()) {
        inapplicable("relation 3 needs alpha, beta != 0");
      }
      const Real abt = p.alpha * p.beta * p.tau / p.gamma;
      if (!(abt.abs() < one)) inapplicable("relation 3 needs |alpha beta tau / gamma| < 1");
      const Real d = qpoch_inf(p.tau, p.q);
      if (d.is_zero()) throw PoleError("heine_transform: vanishing infinite product (tau; q)");
      return HeineTransformed{qpoch_inf(abt, p.q) / d,
                              Phi21Params{p.gamma / p.alpha, p.gamma / p.beta, p.gamma, p.q, abt}};
    }
    case 4: {
      if (!(p.alpha.abs() < one)) inapplicable("relation 4 needs |alpha| < 1");
      if (p.alpha.is_zero()) inapplicable("relation 4 needs alpha != 0");
      const Real bt = p.beta * p.tau;
      return HeineTransformed{ratio(p.alpha, bt, p.gamma, p.tau),
                              Phi21Params{p.gamma / p.alpha, p.tau, bt, p.q, p.alpha}};
    }
    case 5: {
      if (p.alpha.is_zero()) inapplicable("relation 5 needs alpha != 0");
      if (p.gamma.is_zero()) inapplicable("relation 5 needs gamma != 0");
      const Real ga = p.gamma / p.alpha;
      if (!(ga.abs() < one)) inapplicable("relation 5 needs |gamma/alpha| < 1");
      const Real at = p.alpha * p.tau;
      return HeineTransformed{ratio(ga, at, p.gamma, p.tau),
                              Phi21Params{p.alpha * p.beta * p.tau / p.gamma, p.alpha, at, p.q, ga}};
    }
    default:
      throw DomainError("heine_transform: k must be in 1..5");
  }
}

Real rogers_fine_rhs(const Real& x, const Real& q, int precision) {
  return rogers_fine_general(1, 0, x, q, precision);
}

Real rogers_fine_lhs(const Real& x, const Real& q, int precision) {
  return rogers_fine_lhs_general(1, 0, x, q, precision);
}

Real rogers_fine_general(long a, long b, const Real& x, const Real& q, int precision) {
  if (a < 1 || b < 0) throw DomainError("rogers_fine_general: requires a >= 1, b >= 0");
  const int P = precision;
  const Real one = Real::of(1L, P);
  if (!(q.abs() < one)) throw DomainError("rogers_fine_general: requires |q| < 1");
  const Real z = x * q.pow_int(a - b);  // geometric factor of the ratio series
  if (!(z.abs() < one)) throw DomainError("rogers_fine_general: non-decaying terms, |x q^{a-b}| >= 1");

  // term_{n+1}/term_n = z * (1 - x q^{(a-b) + 2a n}) / (1 - x q^{(2a-b) + 2a n})
  const Real q2a = q.pow_int(2 * a);
  Real num_pow = q.pow_int(a - b);      // q^{(a-b) + 2a n}
  Real den_pow = q.pow_int(2 * a - b);  // q^{(2a-b) + 2a n}
  Real term = Real::of(1L, P);
  return windowed_sum(P, [&](long n) {
    if (n == 0) return term;
    const Real den = 1L - x * den_pow;
    if (den.is_zero()) {
      throw PoleError("rogers_fine_general: denominator factor vanished at n = " +
                      std::to_string(n));
    }
    term = term * z * (1L - x * num_pow) / den;
    num_pow *= q2a;
    den_pow *= q2a;
    return term;
  });
}

Real rogers_fine_lhs_general(long a, long b, const Real& x, const Real& q, int precision) {
  if (a < 1 || b < 0) throw DomainError("rogers_fine_lhs_general: requires a >= 1, b >= 0");
  const int P = precision;
  if (!(q.abs() < Real::of(1L, P))) throw DomainError("rogers_fine_lhs_general: requires |q| < 1");
  // Exponent a n(n+1)/2 - n b grows quadratically, so the sum converges for
  // any x; terms are computed directly from the exponent.
  return windowed_sum(P, [&](long n) {
    const mpz_class e = mpz_class(a) * n * (n + 1) / 2 - mpz_class(b) * n;
    return x.pow_int(n) * q.pow_z(e);
  });
}

namespace {

// Shared shape of G(a, lambda; b, q) and G(aq, lambda q; b, q): only the
// exponent increment differs (n+1 vs n+2 per step).
Real g_series(const GParams& gp, int precision, long exponent_shift) {
  const int P = precision;
  if (!(gp.q.abs() < Real::of(1L, P))) throw DomainError("g series: requires |q| < 1");
  Real term = Real::of(1L, P);
  Real qn = Real::of(1L, P);  // q^n
  return windowed_sum(P, [&](long n) {
    if (n == 0) return term;
    const Real qprev = qn;  // q^{n-1}
    qn *= gp.q;
    const Real dq = 1L - qn;                 // 1 - q^n
    const Real db = 1L + gp.b * qn;          // 1 + b q^n
    if (db.is_zero()) throw PoleError("g series: factor 1 + b q^n vanished at n = " + std::to_string(n));
    // q-exponent increment n(n+1)/2 -> adds n, plus the family shift.
    term = term * gp.q.pow_int(n - 1 + exponent_shift) * (gp.a + gp.lambda * qprev) / (dq * db);
    return term;
  });
}

}  // namespace

Real g0(const GParams& gp, int precision) { return g_series(gp, precision, 1); }
Real g1(const GParams& gp, int precision) { return g_series(gp, precision, 2); }

Real s2_closed_form(long kappa, const Real& q, int precision) {
  if (kappa < 1) throw DomainError("s2_closed_form: kappa must be >= 1");
  const int P = precision;
  const Real zero = Real::of(0L, P);
  const Real one = Real::of(1L, P);
  if (!(q > zero) || !(q < one)) throw DomainError("s2_closed_form: requires 0 < q < 1");

  // term_0 = 1/(1-q); term_{n+1} = -term_n q^{kappa n + 2} / (1 - q^{1 + kappa(n+1)})
  const Real qk = q.pow_int(kappa);
  Real kpow = q.pow_int(2);             // q^{kappa n + 2}
  Real dpow = q * qk;                   // q^{1 + kappa(n+1)}
  Real term = one / (one - q);
  return windowed_sum(P, [&](long n) {
    if (n == 0) return term;
    const Real den = 1L - dpow;
    if (den.is_zero()) {
      throw PoleError("s2_closed_form: denominator factor vanished at n = " + std::to_string(n));
    }
    term = -term * kpow / den;
    kpow *= qk;
    dpow *= qk;
    return term;
  });
}

}  // namespace qsum
