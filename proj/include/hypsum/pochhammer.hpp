/**
 * @file pochhammer.hpp
 * @brief Rising factorials, factorials, binomials, double factorials.
 *
 * Everything here is exact. Rising factorials with integer index are plain
 * rational products; the half-integer-index extension lives in
 * gamma_product.hpp since it needs formal gamma factors.
 */
#pragma once

#include "hypsum/errors.hpp"
#include "hypsum/rational.hpp"

#include <utility>

namespace hypsum {

// Exactly represents k/2 for any integer k. Used as a rising-factorial index.
struct HalfInteger {
    Int twice;  // the represented value is twice/2

    HalfInteger() : twice(0) {}
    explicit HalfInteger(Int t) : twice(std::move(t)) {}
    static HalfInteger from_integer(const Int& n) { return HalfInteger(n * 2); }
    static HalfInteger halves(long k) { return HalfInteger(Int(k)); }

    bool is_integer() const { return twice % 2 == 0; }
    Int integer_value() const { return twice / 2; }
    Rational value() const { return Rational(twice, Int(2)); }

    friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

Int factorial(const Int& n);
Int binomial(const Int& n, const Int& k);

// m!! = m(m-2)(m-4)...; 0!! = 1 by convention. Requires m >= 0.
Int double_factorial(const Int& m);

// Conventions exposed separately so callers never pass a negative argument.
inline const Int kDoubleFactorialZero{1};    // 0!!
inline const Int kDoubleFactorialMinusOne{1};  // (-1)!!

// Rising factorial (a)_m for integer m.
//   m > 0: a(a+1)...(a+m-1)
//   m = 0: 1
//   m < 0: 1/((a-1)(a-2)...(a+m)); throws DIVISION_BY_ZERO on a zero hit.
Rational pochhammer_int(const Rational& a, const Int& m);

// The pair ((a)_n, (a+1/2)_n). Satisfies 4^n * (a)_n * (a+1/2)_n = (2a)_{2n};
// equivalently (x)_{2n} = 4^n (x/2)_n ((x+1)/2)_n with x = 2a.
std::pair<Rational, Rational> duplication_split_even(const Rational& a, const Int& n);

} // namespace hypsum
