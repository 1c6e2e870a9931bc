/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational scalar used throughout the library.
 *
 * Thin value wrapper over GMP's mpq_class. Always canonical: lowest terms,
 * denominator > 0, zero stored as 0/1. No rounding anywhere.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypsum {

using Int = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && q_ <= 0; }
    // True when 2*value is an integer, i.e. the value lies on the half-integer lattice.
    bool is_half_integer_lattice() const {
        return q_.get_den() == 1 || q_.get_den() == 2;
    }
    int sign() const { return sgn(q_); }

    // Integer value; throws unless is_integer().
    Int to_integer() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        return q_.get_num();
    }

    Int floor() const {
        Int r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return r;
    }

    // Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den(), num());
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return reciprocal().pow(-e);
        Int n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    // Prints "p" for integers, "p/q" otherwise. No whitespace.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class q_;
};

// Parses "p", "p/q" (covers half-integer shorthand "k/2"). Empty optional on bad input.
inline std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!valid_int(s)) return std::nullopt;
            return Rational(Int(std::string(s)));
        }
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den)) return std::nullopt;
        Int d{std::string(den)};
        if (d == 0) return std::nullopt;
        return Rational(Int(std::string(num)), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace hypsum
