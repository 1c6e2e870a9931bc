/**
 * @file series_oracle.hpp
 * @brief Brute-force ground truth: direct summation of terminating
 *        hypergeometric series and truncated formal power series arithmetic.
 *
 * Deliberately self-contained. Nothing here calls the closed-form evaluators
 * or the gamma kernel; terms are built by plain rational recurrences so the
 * oracle stays an independent check.
 */
#pragma once

#include "hypsum/errors.hpp"
#include "hypsum/rational.hpp"

#include <cstddef>
#include <vector>

namespace hypsum {

// A terminating pFq specification: sum_{k=0}^{n} prod(upper)_k / prod(lower)_k * z^k / k!.
struct HypSeriesSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument;
    Int terminate_at;  // index n of the negative-integer upper parameter

    // At least one upper parameter must equal -terminate_at.
    bool well_formed() const;
};

// Direct term-by-term summation with exact rationals.
// Throws UNDEFINED_SERIES when a lower-parameter rising factorial vanishes at
// some k <= terminate_at.
Rational hyp_terminating_sum(const HypSeriesSpec& spec);

// Truncated formal power series over Rational; coefficients[k] multiplies x^k.
struct SeriesPoly {
    std::vector<Rational> coefficients;

    SeriesPoly() = default;
    explicit SeriesPoly(std::size_t order) : coefficients(order + 1, Rational(0)) {}

    std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coefficients[k]; }
    Rational& operator[](std::size_t k) { return coefficients[k]; }

    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;
};

SeriesPoly operator+(const SeriesPoly& p, const SeriesPoly& q);

// exp(scale * x) truncated at order N: coefficients scale^k / k!.
SeriesPoly exp_series(const Rational& scale, std::size_t order);

// 1F1(a; c; x) truncated at order N: coefficients (a)_k / ((c)_k k!).
SeriesPoly hyp1f1_series(const Rational& a, const Rational& c, std::size_t order);

// 0F1(; c; scale * x^2) truncated at order N: coefficient of x^{2k} is
// scale^k / ((c)_k k!), odd coefficients zero.
SeriesPoly hyp0f1_series(const Rational& c, const Rational& scale, std::size_t order);

// Exact convolution truncated at the common order; orders must match.
SeriesPoly cauchy_product(const SeriesPoly& p, const SeriesPoly& q);

} // namespace hypsum
