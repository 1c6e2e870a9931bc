/**
 * @file gamma_product.hpp
 * @brief Formal products of gamma factors at rational arguments and their
 *        canonical normal form.
 *
 * A GammaProduct is coeff * prod_i Gamma(x_i)^{e_i} with rational x_i and
 * integer e_i. Normalization cancels factors whose arguments differ by an
 * integer through the recurrence Gamma(x+1) = x Gamma(x), reduces surviving
 * half-integer arguments to powers of Gamma(1/2) = sqrt(pi), and classifies
 * the result.
 *
 * Pole convention: the whole product is treated as a joint limit. A gamma
 * factor at a nonpositive integer contributes a simple pole (order -1 per
 * exponent unit); zeros arising from recurrence chains crossing the origin
 * contribute order +1. Positive total order means the product vanishes,
 * negative means it diverges. Matched pole/zero pairs cancel exactly, which
 * reproduces finite limits of ratios like Gamma(-1/2+x)/Gamma(-1+x) as x->0.
 */
#pragma once

#include "hypsum/pochhammer.hpp"
#include "hypsum/rational.hpp"

#include <map>
#include <string>

namespace hypsum {

enum class NormalTag { Finite, Zero, Pole, Irreducible };

struct NormalForm {
    NormalTag tag = NormalTag::Finite;
    Rational value;              // meaningful for Finite (nonzero) and Zero (0)
    long long pi_half_power = 0; // exponent k in pi^(k/2), Finite only

    static NormalForm finite(Rational v, long long k = 0) {
        return {NormalTag::Finite, std::move(v), k};
    }
    static NormalForm zero() { return {NormalTag::Zero, Rational(0), 0}; }
    static NormalForm pole() { return {NormalTag::Pole, Rational(0), 0}; }
    static NormalForm irreducible() { return {NormalTag::Irreducible, Rational(0), 0}; }

    bool is_finite() const { return tag == NormalTag::Finite; }
    bool is_zero() const { return tag == NormalTag::Zero; }
    bool is_pole() const { return tag == NormalTag::Pole; }

    // Rational value for Finite with no pi factor, or Zero.
    Rational rational_value() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

    // "p/q", "p/q*pi^(k/2)" (odd k), "p/q*pi^m" (even k), "0", "pole", "irreducible".
    std::string str() const;
};

// NormalForm product. Zero absorbs finite factors; Zero*Pole is rejected
// (callers cancel matched gamma chains before classifying, so a well-formed
// pipeline never multiplies a Zero by a Pole at the NormalForm level).
NormalForm operator*(const NormalForm& a, const NormalForm& b);

class GammaProduct {
public:
    GammaProduct() : coeff_(1) {}
    explicit GammaProduct(Rational coeff) : coeff_(std::move(coeff)) {}

    static GammaProduct gamma(const Rational& argument, long long exponent = 1) {
        GammaProduct g;
        g.mul_gamma(argument, exponent);
        return g;
    }
    // sqrt(pi) as Gamma(1/2).
    static GammaProduct sqrt_pi(long long exponent = 1) {
        return gamma(Rational(1, 2), exponent);
    }

    GammaProduct& mul_coeff(const Rational& c) { coeff_ *= c; return *this; }
    GammaProduct& mul_gamma(const Rational& argument, long long exponent = 1) {
        if (exponent == 0) return *this;
        auto it = factors_.find(argument);
        if (it == factors_.end()) {
            factors_.emplace(argument, exponent);
        } else if ((it->second += exponent) == 0) {
            factors_.erase(it);
        }
        return *this;
    }
    GammaProduct& operator*=(const GammaProduct& o) {
        coeff_ *= o.coeff_;
        for (const auto& [arg, exp] : o.factors_) mul_gamma(arg, exp);
        return *this;
    }
    friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }

    const Rational& coeff() const { return coeff_; }
    const std::map<Rational, long long>& factors() const { return factors_; }

    // Equal normal forms compare equal.
    friend bool operator==(const GammaProduct& a, const GammaProduct& b);

private:
    Rational coeff_;
    std::map<Rational, long long> factors_;  // argument -> exponent, no zeros
};

NormalForm gamma_normalize(const GammaProduct& g);

// Formal Gamma(a+k)/Gamma(a) for half-integer index k.
GammaProduct pochhammer_half(const Rational& a, const HalfInteger& k);

} // namespace hypsum
