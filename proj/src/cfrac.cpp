#include "qsum/cfrac.hpp"

#include <algorithm>
#include <cstdlib>

namespace qsum {

namespace {

// Rescale bound: |B_k| outside [10^-100, 10^100] triggers scaling by a power
// of two; the scaling cancels in every convergent ratio.
constexpr long kRescaleBinaryExp = 333;  // ~= 100 * log2(10)

int coeff_digits(const std::vector<Real>& coeffs) {
  int digits = Real::kMinDigits;
  for (const Real& c : coeffs) digits = std::max(digits, c.digits());
  return digits;
}

}  // namespace

CFracEval eval_cfrac(const CFrac& cf, long depth) {
  if (cf.coeffs.empty()) throw DomainError("eval_cfrac: no coefficients");
  if (cf.coeffs[0].is_zero()) throw DomainError("eval_cfrac: d0 must be nonzero");
  if (depth < 2) throw DomainError("eval_cfrac: depth must be >= 2");

  const int P = coeff_digits(cf.coeffs);
  const long max_depth = std::min<long>(depth, static_cast<long>(cf.coeffs.size()) - 1);

  // Three-term recurrence for C_k = A_k/B_k where the depth-k convergent uses
  // d0..dk: A starts (1, 0), B starts (0, 1), partial numerator a_1 = d0 and
  // a_{k+1} = +-d_k afterwards (sign per the fraction form).
  Real a_prev = Real::of(1L, P), a_curr = Real::of(0L, P);
  Real b_prev = Real::of(0L, P), b_curr = Real::of(1L, P);

  Real even_value(P), odd_value(P);
  long even_depth = -1, odd_depth = -1;

  for (long k = 0; k <= max_depth; ++k) {
    Real numer = cf.coeffs[static_cast<std::size_t>(k)];
    if (k >= 1 && cf.sign == CFrac::Sign::Minus) numer = -numer;

    Real a_next = a_curr + numer * a_prev;
    Real b_next = b_curr + numer * b_prev;

    if (b_next.is_zero()) {
      throw IndeterminateConvergentError(static_cast<std::size_t>(k),
                                         "indeterminate convergent at depth " + std::to_string(k));
    }
    const long bexp = b_next.binary_exponent();
    if (bexp > kRescaleBinaryExp || bexp < -kRescaleBinaryExp) {
      a_next = a_next.mul_pow2(-bexp);
      b_next = b_next.mul_pow2(-bexp);
      a_curr = a_curr.mul_pow2(-bexp);
      b_curr = b_curr.mul_pow2(-bexp);
    }

    const Real conv = a_next / b_next;
    if (k % 2 == 0) {
      even_value = conv;
      even_depth = k;
    } else {
      odd_value = conv;
      odd_depth = k;
    }

    a_prev = a_curr;
    b_prev = b_curr;
    a_curr = a_next;
    b_curr = b_next;
  }

  if (odd_depth < 0) odd_value = even_value;  // single-coefficient fraction

  const Real one = Real::of(1L, P);
  const Real scale = even_value.abs() > one ? even_value.abs() : one;
  const bool converged = (even_value - odd_value).abs() < Real::pow10(-(P - 10), P) * scale;
  return CFracEval{even_value, odd_value, converged, even_depth, odd_depth};
}

namespace {

// Hankel minor det[c_{start+i+j}] of the given order.
Rat hankel_minor(const std::vector<Rat>& c, std::size_t start, std::size_t order) {
  RatMatrix m(order, std::vector<Rat>(order));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      m[i][j] = c[start + i + j];
    }
  }
  return exact_det(m);
}

}  // namespace

std::vector<Rat> muir_rogers(const PowerSeries& ps, int M) {
  if (M < 0 || M > 16) throw DomainError("muir_rogers: M must be in [0, 16]");
  if (ps.coeffs.empty() || ps.coeffs[0].is_zero()) {
    throw DomainError("muir_rogers: c0 must be nonzero");
  }
  if (static_cast<long>(ps.coeffs.size()) < M + 1) {
    throw DomainError("muir_rogers: needs coefficients c0..cM");
  }

  const std::vector<Rat>& c = ps.coeffs;
  std::vector<Rat> alpha(static_cast<std::size_t>(M) + 1);
  for (long k = 0; k <= M; ++k) {
    const std::size_t m = static_cast<std::size_t>(k / 2);
    alpha[static_cast<std::size_t>(k)] =
        hankel_minor(c, k % 2 == 0 ? 0 : 1, m + 1);
  }

  std::vector<Rat> e;
  e.reserve(static_cast<std::size_t>(M) + 1);
  for (long n = 0; n <= M; ++n) {
    if (alpha[static_cast<std::size_t>(n)].is_zero()) {
      throw DegenerateMinorError(static_cast<std::size_t>(n), std::move(e));
    }
    if (n == 0) {
      e.push_back(alpha[0]);
    } else if (n == 1) {
      e.push_back(alpha[1] / alpha[0]);
    } else if (n == 2) {
      e.push_back(alpha[2] / (alpha[1] * alpha[0]));
    } else {
      e.push_back(alpha[static_cast<std::size_t>(n)] * alpha[static_cast<std::size_t>(n - 3)] /
                  (alpha[static_cast<std::size_t>(n - 1)] * alpha[static_cast<std::size_t>(n - 2)]));
    }
  }
  return e;
}

Rat closed_form_e(long kappa, const Rat& q, long n) {
  if (kappa < 1) throw DomainError("closed_form_e: kappa must be >= 1");
  if (n < 0) throw DomainError("closed_form_e: n must be nonnegative");
  if (n == 0) return Rat(1);
  if (n == 1) return Rat(1) - q;
  const long m = n / 2;
  if (n % 2 == 0) {
    return q.pow_int(kappa * m + 1 - kappa) * (Rat(1) - q.pow_int(kappa * m));
  }
  return q.pow_int(kappa * m) * (Rat(1) - q.pow_int(kappa * m + 1));
}

namespace {

using RatPoly = std::vector<Rat>;  // coefficient list, lowest degree first

RatPoly poly_sub_shifted_scaled(const RatPoly& a, const RatPoly& b, const Rat& s) {
  // a(x) - s * x * b(x)
  RatPoly out(std::max(a.size(), b.size() + 1), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] -= s * b[i];
  return out;
}

}  // namespace

PowerSeries cfrac_to_series(const std::vector<Rat>& e, int K, int N) {
  if (K < 1 || static_cast<std::size_t>(K) > e.size()) {
    throw DomainError("cfrac_to_series: K must address available coefficients e0..e_{K-1}");
  }
  if (N < 0) throw DomainError("cfrac_to_series: N must be nonnegative");
  // A depth-K truncation of a longer fraction only matches the full expansion
  // up to order K-1; a complete (terminating) fraction expands to any order.
  if (static_cast<std::size_t>(K) < e.size() && K < N + 1) {
    throw DomainError("cfrac_to_series: requires K >= N+1 for a truncated fraction");
  }

  // Assemble the depth-K convergent bottom-up as a ratio of polynomials:
  // F = 1 at the innermost level, then F <- 1 - e_k x / F.
  RatPoly num{Rat(1)}, den{Rat(1)};
  for (int k = K - 1; k >= 1; --k) {
    RatPoly next = poly_sub_shifted_scaled(num, den, e[static_cast<std::size_t>(k)]);
    den = std::move(num);
    num = std::move(next);
  }
  // Value = e0 * den / num; expand by exact series division.
  if (num.empty() || num[0].is_zero()) {
    throw DomainError("cfrac_to_series: degenerate fraction, denominator constant term is zero");
  }

  std::vector<Rat> c(static_cast<std::size_t>(N) + 1, Rat(0));
  for (long j = 0; j <= N; ++j) {
    Rat acc = static_cast<std::size_t>(j) < den.size() ? e[0] * den[static_cast<std::size_t>(j)]
                                                       : Rat(0);
    for (long i = 1; i <= j && static_cast<std::size_t>(i) < num.size(); ++i) {
      acc -= num[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - i)];
    }
    c[static_cast<std::size_t>(j)] = acc / num[0];
  }
  return PowerSeries{std::move(c)};
}

std::vector<Real> ramanujan_cf_coeffs(const RamanujanParams& rp, long n_last) {
  return ramanujan_cf_coeffs(rp.a, rp.lambda, rp.b, rp.q, n_last);
}

CFrac make_cfrac(CFrac::Sign sign, const std::vector<Rat>& coeffs, int digits) {
  std::vector<Real> reals;
  reals.reserve(coeffs.size());
  for (const Rat& c : coeffs) reals.push_back(Real::from_rat(c, digits));
  return CFrac{sign, std::move(reals)};
}

CFrac make_cfrac(CFrac::Sign sign, std::vector<Real> coeffs) {
  return CFrac{sign, std::move(coeffs)};
}

}  // namespace qsum
