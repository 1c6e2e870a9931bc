#include "hypsum/series_oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace hypsum {

bool HypSeriesSpec::well_formed() const {
    if (terminate_at < 0) return false;
    Rational neg_n = -Rational(terminate_at);
    for (const auto& u : upper)
        if (u == neg_n) return true;
    return false;
}

Rational hyp_terminating_sum(const HypSeriesSpec& spec) {
    if (!spec.well_formed())
        throw std::invalid_argument(
            "hyp_terminating_sum: no upper parameter equals -terminate_at");

    // Lower parameters must keep (c)_k nonzero for 1 <= k <= n, i.e. no
    // c + t = 0 with 0 <= t <= n-1.
    for (const auto& c : spec.lower) {
        if (!c.is_integer()) continue;
        Int ci = c.to_integer();
        if (ci <= 0 && -ci <= spec.terminate_at - 1) {
            std::ostringstream msg;
            msg << "hyp_terminating_sum: lower parameter " << c
                << " makes (c)_" << (-ci + 1) << " vanish within termination range 0.."
                << spec.terminate_at;
            throw EvalError(ErrorKind::UndefinedSeries, msg.str());
        }
    }

    Rational sum(0);
    Rational term(1);
    for (Int k = 0;; ++k) {
        sum += term;
        if (k == spec.terminate_at) break;
        // term_{k+1} = term_k * prod(u + k) / prod(l + k) * z / (k + 1)
        Rational shift(k);
        for (const auto& u : spec.upper) term *= u + shift;
        for (const auto& l : spec.lower) term /= l + shift;
        term *= spec.argument;
        term /= Rational(Int(k + 1));
    }
    return sum;
}

SeriesPoly operator+(const SeriesPoly& p, const SeriesPoly& q) {
    if (p.coefficients.size() != q.coefficients.size())
        throw std::invalid_argument("SeriesPoly: truncation orders differ");
    SeriesPoly r(p.order());
    for (std::size_t k = 0; k < p.coefficients.size(); ++k)
        r[k] = p[k] + q[k];
    return r;
}

SeriesPoly exp_series(const Rational& scale, std::size_t order) {
    SeriesPoly p(order);
    Rational c(1);
    p[0] = c;
    for (std::size_t k = 1; k <= order; ++k) {
        c *= scale;
        c /= Rational(static_cast<long>(k));
        p[k] = c;
    }
    return p;
}

SeriesPoly hyp1f1_series(const Rational& a, const Rational& c, std::size_t order) {
    SeriesPoly p(order);
    Rational t(1);
    p[0] = t;
    for (std::size_t k = 0; k < order; ++k) {
        Rational shift(static_cast<long>(k));
        Rational denom = c + shift;
        if (denom.is_zero()) {
            std::ostringstream msg;
            msg << "hyp1f1_series: lower parameter " << c << " makes (c)_" << (k + 1)
                << " vanish within order " << order;
            throw EvalError(ErrorKind::UndefinedSeries, msg.str());
        }
        t *= (a + shift);
        t /= denom;
        t /= Rational(static_cast<long>(k + 1));
        p[k + 1] = t;
    }
    return p;
}

SeriesPoly hyp0f1_series(const Rational& c, const Rational& scale, std::size_t order) {
    SeriesPoly p(order);
    Rational t(1);
    p[0] = t;
    for (std::size_t k = 0; 2 * (k + 1) <= order; ++k) {
        Rational shift(static_cast<long>(k));
        Rational denom = c + shift;
        if (denom.is_zero()) {
            std::ostringstream msg;
            msg << "hyp0f1_series: lower parameter " << c << " makes (c)_" << (k + 1)
                << " vanish within order " << order;
            throw EvalError(ErrorKind::UndefinedSeries, msg.str());
        }
        t *= scale;
        t /= denom;
        t /= Rational(static_cast<long>(k + 1));
        p[2 * (k + 1)] = t;
    }
    return p;
}

SeriesPoly cauchy_product(const SeriesPoly& p, const SeriesPoly& q) {
    if (p.coefficients.size() != q.coefficients.size())
        throw std::invalid_argument("cauchy_product: truncation orders differ");
    SeriesPoly r(p.order());
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < q.coefficients.size(); ++j)
            r[i + j] += p[i] * q[j];
    }
    return r;
}

} // namespace hypsum
