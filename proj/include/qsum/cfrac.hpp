#pragma once

#include <cstddef>
#include <vector>

#include "qsum/errors.hpp"
#include "qsum/rational.hpp"
#include "qsum/real.hpp"

namespace qsum {

/*
 * Continued fraction d0/(1 +- d1/(1 +- d2/(1 +- ...))).
 *
 * Plus means every level reads 1 + d_k/(...), Minus means 1 - d_k/(...).
 * The Minus form with partial numerators e_n*x equals the Plus form with
 * d_0 = e_0 and d_n = -e_n*x for n >= 1, level by level.
 */
struct CFrac {
  enum class Sign { Plus, Minus };

  Sign sign = Sign::Plus;
  std::vector<Real> coeffs;  // d0, d1, ..., dN
};

struct CFracEval {
  Real even_value;   // convergent at the largest even depth <= N
  Real odd_value;    // convergent at the largest odd depth <= N
  bool converged;    // |even - odd| < 10^-(P-10) * max(1, |even|)
  long even_depth;
  long odd_depth;
};

// Evaluates convergents by the standard three-term recurrence with periodic
// rescaling of (A, B) pairs by powers of two whenever |B_k| leaves
// [10^-100, 10^100].  The depth-k convergent uses coefficients d0..dk.
// A vanishing denominator raises IndeterminateConvergentError.
CFracEval eval_cfrac(const CFrac& cf, long depth);

// Power series c0 + c1 x + c2 x^2 + ... with exact coefficients.
struct PowerSeries {
  std::vector<Rat> coeffs;
};

// Hankel minor of the Muir-Rogers construction vanished at `index`;
// `partial` carries the coefficients e_0..e_{index-1} that are still defined.
class DegenerateMinorError : public Error {
 public:
  DegenerateMinorError(std::size_t index_, std::vector<Rat> partial_)
      : Error("degenerate Hankel minor at index " + std::to_string(index_)),
        index(index_),
        partial(std::move(partial_)) {}

  std::size_t index;
  std::vector<Rat> partial;
};

/*
 * Muir-Rogers construction: coefficients e_0..e_M of the Minus-form fraction
 *
 *   c0 + c1 x + c2 x^2 + ... = e0/(1-) e1 x/(1-) e2 x/(1-) ...
 *
 * via ratios of Hankel determinants
 *   alpha_0 = c0, alpha_1 = c1,
 *   alpha_{2m}   = det [c_{i+j}]_{0<=i,j<=m},
 *   alpha_{2m+1} = det [c_{1+i+j}]_{0<=i,j<=m},
 *   e0 = alpha_0, e1 = alpha_1/alpha_0, e2 = alpha_2/(alpha_1 alpha_0),
 *   e_n = alpha_n alpha_{n-3} / (alpha_{n-1} alpha_{n-2})   (n >= 3).
 *
 * Needs c_0..c_M; M <= 16 keeps the minors at order <= 9.  All arithmetic is
 * exact; a vanishing minor raises DegenerateMinorError.
 */
std::vector<Rat> muir_rogers(const PowerSeries& ps, int M);

// Closed forms of the Muir-Rogers coefficients for c_n = (q; q^kappa)_n:
//   e_0 = 1, e_1 = 1 - q,
//   e_{2m}   = q^{kappa m + 1 - kappa} (1 - q^{kappa m}),
//   e_{2m+1} = q^{kappa m} (1 - q^{kappa m + 1})       (m >= 1).
Rat closed_form_e(long kappa, const Rat& q, long n);

// Expands the depth-K convergent of the Minus-form fraction with partial
// numerators e_n*x (using e_0..e_{K-1}) as a power series to order N by exact
// polynomial division.  For a truncation of a longer fraction K >= N+1 is
// required so the cut cannot bleed into the reported coefficients; when
// K == e.size() the fraction terminates and expands exactly to any order.
PowerSeries cfrac_to_series(const std::vector<Rat>& e, int K, int N);

/*
 * Coefficient families.  These are closed under +,*,pow_int, so they are
 * generated for both Real and Rat scalars.
 */

// Ramanujan: d0 = 1, d_{2m} = b q^m + lambda q^{2m} (m >= 1),
//            d_{2m+1} = a q^{m+1} + lambda q^{2m+1} (m >= 0).
template <class T>
std::vector<T> ramanujan_cf_coeffs(const T& a, const T& lambda, const T& b, const T& q,
                                   long n_last) {
  if (n_last < 1) throw DomainError("ramanujan_cf_coeffs: need at least d0..d1");
  std::vector<T> d;
  d.reserve(static_cast<std::size_t>(n_last) + 1);
  d.push_back(pow_int(q, 0));  // d0 = 1
  for (long n = 1; n <= n_last; ++n) {
    const long m = n / 2;
    if (n % 2 == 0) {
      d.push_back(b * pow_int(q, m) + lambda * pow_int(q, 2 * m));
    } else {
      d.push_back(a * pow_int(q, m + 1) + lambda * pow_int(q, 2 * m + 1));
    }
  }
  return d;
}

struct RamanujanParams {
  Real a;
  Real lambda;
  Real b;
  Real q;
};

std::vector<Real> ramanujan_cf_coeffs(const RamanujanParams& rp, long n_last);

// The two Entry-7 coefficient families:
//   which = 1:  d0 = 1, d_{2k-1} = q^{2k-1}, d_{2k} = q^{2k} - q^k;
//   which = 2:  d0 = 1, d_{2k} = q^{2k} - q^k, d_{2k+1} = q^{2k+1} - q^k.
template <class T>
std::vector<T> gauss_entry7_coeffs(int which, const T& q, long n_last) {
  if (which != 1 && which != 2) throw DomainError("gauss_entry7_coeffs: which must be 1 or 2");
  if (n_last < 1) throw DomainError("gauss_entry7_coeffs: need at least d0..d1");
  std::vector<T> d;
  d.reserve(static_cast<std::size_t>(n_last) + 1);
  d.push_back(pow_int(q, 0));
  for (long n = 1; n <= n_last; ++n) {
    if (which == 1) {
      if (n % 2 == 1) {
        d.push_back(pow_int(q, n));
      } else {
        d.push_back(pow_int(q, n) - pow_int(q, n / 2));
      }
    } else {
      d.push_back(pow_int(q, n) - pow_int(q, n / 2));
    }
  }
  return d;
}

// Coefficients of the Minus-to-Plus converted fraction for sum q^n (q;q^kappa)_n:
//   d0 = 1, d_{2m} = q^{2 kappa m + 2 - kappa} - q^{kappa m + 2 - kappa} (m >= 1),
//   d_{2m+1} = q^{2 kappa m + 2} - q^{kappa m + 1} (m >= 0).
template <class T>
std::vector<T> gauss4_coeffs(long kappa, const T& q, long n_last) {
  if (kappa < 1) throw DomainError("gauss4_coeffs: kappa must be >= 1");
  if (n_last < 1) throw DomainError("gauss4_coeffs: need at least d0..d1");
  std::vector<T> d;
  d.reserve(static_cast<std::size_t>(n_last) + 1);
  d.push_back(pow_int(q, 0));
  for (long n = 1; n <= n_last; ++n) {
    const long m = n / 2;
    if (n % 2 == 0) {
      d.push_back(pow_int(q, 2 * kappa * m + 2 - kappa) - pow_int(q, kappa * m + 2 - kappa));
    } else {
      d.push_back(pow_int(q, 2 * kappa * m + 2) - pow_int(q, kappa * m + 1));
    }
  }
  return d;
}

// Builds an evaluatable fraction from exact coefficients at P decimal digits.
CFrac make_cfrac(CFrac::Sign sign, const std::vector<Rat>& coeffs, int digits);
CFrac make_cfrac(CFrac::Sign sign, std::vector<Real> coeffs);

}  // namespace qsum
