/**
 * @file closed_forms.hpp
 * @brief Closed-form evaluation of terminating 2F1 series at argument 2 and
 *        of the generalized Kummer summations at argument 1/2.
 *
 * Everything is implemented from the right-hand sides only; the series oracle
 * is never called from here. Two families:
 *
 *   - 2F1(-2n, a; 2a+-j; 2) and 2F1(-2n-1, a; 2a+-j; 2)   (even/odd order)
 *   - 2F1(-n, a; -2n+j; 2) and 2F1(-n, a; -2n-j; 2)       (negative-integer
 *     lower parameter, with an alternative two-Pochhammer form)
 *
 * plus the generalized second/third Kummer summations whose right-hand sides
 * are gamma products with half-integer-index rising factorials, the argument
 * transformation 2 -> 1/2, and the coefficient expansion of
 * exp(-x/2) 1F1(a; 2a+-j; x).
 */
#pragma once

#include "hypsum/gamma_product.hpp"
#include "hypsum/pochhammer.hpp"
#include "hypsum/rational.hpp"
#include "hypsum/series_oracle.hpp"

#include <tuple>
#include <utility>

namespace hypsum {

// Which of the paired signs in a "+-" display is meant.
enum class SignVariant { Upper, Lower };

inline int sign_factor(SignVariant v) { return v == SignVariant::Upper ? 1 : -1; }
// delta_j: j for the upper signs, 0 for the lower.
inline long delta_j(SignVariant v, long j) { return v == SignVariant::Upper ? j : 0; }
// epsilon_j: 0 for the upper signs, j for the lower.
inline long epsilon_j(SignVariant v, long j) { return v == SignVariant::Upper ? 0 : j; }

// 2F1(-2n, a; 2a+-j; 2) =
//   4^n (1/2)_n / (2a+-j)_{2n} * sum_{r=0}^{floor(j/2)} (-1)^r C(j,2r) (-n)_r (a+delta_j)_{n-r}
Rational f21_2apj_even(long n, const Rational& a, long j, SignVariant v);

// 2F1(-2n-1, a; 2a+-j; 2) =
//   +-4^n (3/2)_n / (2a+-j)_{2n+1} * sum_{r=0}^{floor(j/2)} (-1)^r C(j,2r+1) (-n)_r (a+delta_j)_{n-r}
Rational f21_2apj_odd(long n, const Rational& a, long j, SignVariant v);

// 2F1(-n, a; -2n+j; 2) for j outside [n+1, 2n]:
//   j <= n:     2^{2n-j} (n-j)!/(2n-j)!     * sum_{r=0}^{j} C(j,r) (a/2+1/2-r/2)_n
//   j >= 2n+1:  2^{2n-j} (-1)^n (j-2n-1)!/(j-n-1)! * same sum
Rational f21_m2n_plus(long n, const Rational& a, long j);

// 2F1(-n, a; -2n-j; 2) = 2^{2n+j} n!/(2n+j)! * sum_{r=0}^{j} (-1)^r C(j,r) (a/2+1/2-r/2)_{n+j}
Rational f21_m2n_minus(long n, const Rational& a, long j);

// Coefficient ratios used by the alternative two-Pochhammer forms:
//   A_r(n,j) = (1/2-a/2)_r / (1/2-a/2-n-j)_r
//   B_r(n,j) = (1-a/2)_r   / (1-a/2-n-j)_r
Rational ab_coefficient_a(const Rational& a, long n, long j, long r);
Rational ab_coefficient_b(const Rational& a, long n, long j, long r);

// Alternative forms; equal to f21_m2n_plus / f21_m2n_minus pointwise.
Rational f21_alt_plus(long n, const Rational& a, long j);
Rational f21_alt_minus(long n, const Rational& a, long j);

// Generalized second Kummer summation: value of
// 2F1(alpha, beta; (alpha+beta+1+-j)/2; 1/2) as a normalized gamma product.
NormalForm kummer2_generalized(const Rational& alpha, const Rational& beta, long j,
                               SignVariant v);

// Generalized third Kummer summation: value of
// 2F1(alpha, 1-alpha+-j; gamma; 1/2) as a normalized gamma product.
NormalForm kummer3_generalized(const Rational& alpha, const Rational& gamma, long j,
                               SignVariant v);

// Classic (j = 0) displays, built symbol-for-symbol for reduction checks.
NormalForm kummer2_classic(const Rational& alpha, const Rational& beta);
NormalForm kummer3_classic(const Rational& alpha, const Rational& gamma);

// Argument transformation: returns (lhs, rhs) where
//   lhs = 2F1(-n, beta; gamma; 2)
//   rhs = (-2)^n (beta)_n/(gamma)_n * 2F1(-n, 1-gamma-n; 1-beta-n; 1/2),
// both via the series oracle. Contract: lhs == rhs.
std::pair<Rational, Rational> transform_2_to_half(long n, const Rational& beta,
                                                  const Rational& gamma);

// 2F1(-n, a; 2a; 2) = 2^n sqrt(pi) Gamma(1-a) / ((2a)_n Gamma(1/2-n/2) Gamma(1-a-n/2)).
// Zero for odd n, finite rational for even n.
NormalForm f21_2a_closed(long n, const Rational& a);

// Samoletov-style factorial sum S(n) = sum_{k=0}^n (-1)^k/(n-k)! * (2k+1)!!/(k!(k+1)!).
Rational samoletov_factorial_sum(long n);

// Two-branch gamma form for 2F1(-n, 3/2; 2; 2):
//   n even:  Gamma(n/2+1/2) / (sqrt(pi) Gamma(n/2+1))
//   n odd:  -Gamma(n/2+1)   / (sqrt(pi) Gamma(n/2+3/2))
NormalForm samoletov_branch_form(long n);

// Square of the closed double-factorial form of S(n); squaring keeps the
// value rational. sign(S) = (-1)^n separately.
Rational samoletov_df_form_squared(long n);

// Returns (S, H, F): the factorial sum, the two-branch gamma form, and the
// series value 2F1(-n, 3/2; 2; 2), the latter two divided by n! so the triple
// is element-wise equal. n! is the normalization constant between the
// factorial sum and the series; it was determined by brute force over
// n = 1..10 and is frozen in the tests.
std::tuple<Rational, NormalForm, NormalForm> samoletov_check(long n);

// Coefficients of exp(-x/2) 1F1(a; 2a+-j; x) to the given order, assembled
// from the even/odd closed forms. Equals the Cauchy-product of the two series.
SeriesPoly confluent_expansion_coeffs(const Rational& a, long j, SignVariant v,
                                      std::size_t order);

} // namespace hypsum
