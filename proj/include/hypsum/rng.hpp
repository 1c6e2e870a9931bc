/**
 * @file rng.hpp
 * @brief Seeded PCG32 generator (reference algorithm) and the bounded rational
 *        sampler used by the verification sweeps.
 *
 * The generator follows the published pcg32 reference implementation
 * (state update by 6364136223846793005, XSH-RR output, rejection-based
 * bounded draw) so independent implementations produce identical streams.
 */
#pragma once

#include "hypsum/rational.hpp"

#include <cstdint>

namespace hypsum {

class Pcg32 {
public:
    // Fixed stream; only the state seed varies across sweeps.
    static constexpr std::uint64_t kDefaultStream = 54;

    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = kDefaultStream) {
        state_ = 0;
        inc_ = (stream << 1u) | 1u;
        next();
        state_ += seed;
        next();
    }

    std::uint32_t next() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted =
            static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Uniform draw in [0, bound) without modulo bias.
    std::uint32_t bounded(std::uint32_t bound) {
        std::uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            std::uint32_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

// Random rationals with numerator in [-20, 20] and denominator in [1, 8].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        long num = static_cast<long>(rng_.bounded(41)) - 20;
        long den = static_cast<long>(rng_.bounded(8)) + 1;
        return Rational(num, den);
    }

    // Draws until the predicate accepts, up to a retry cap.
    template <typename Pred>
    bool next_valid(const Pred& accept, Rational& out, int max_tries = 1000) {
        for (int i = 0; i < max_tries; ++i) {
            Rational candidate = next();
            if (accept(candidate)) {
                out = candidate;
                return true;
            }
        }
        return false;
    }

    Pcg32& raw() { return rng_; }

private:
    Pcg32 rng_;
};

} // namespace hypsum
