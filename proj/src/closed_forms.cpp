#include "hypsum/closed_forms.hpp"

#include "hypsum/errors.hpp"

#include <map>
#include <sstream>

namespace hypsum {

namespace {

// (x)_m vanishes for some 1 <= k <= m iff x is an integer in (-m, 0].
bool pochhammer_chain_vanishes(const Rational& x, long m) {
    if (!x.is_integer()) return false;
    Int xi = x.to_integer();
    return xi <= 0 && -xi < m;
}

void require_prefactor_nonzero(const Rational& c, long order, const char* what) {
    if (pochhammer_chain_vanishes(c, order)) {
        std::ostringstream msg;
        msg << what << ": (" << c << ")_" << order << " vanishes";
        throw EvalError(ErrorKind::ParameterPole, msg.str());
    }
}

Rational pow2(long e) { return Rational(2).pow(e); }

// Accumulates a sum of normal forms. Finite contributions are bucketed by
// their pi^(k/2) power; a pole term dominates everything else.
class NormalFormSum {
public:
    void add(const NormalForm& nf) {
        switch (nf.tag) {
            case NormalTag::Zero: return;
            case NormalTag::Pole: pole_ = true; return;
            case NormalTag::Irreducible: irreducible_ = true; return;
            case NormalTag::Finite: buckets_[nf.pi_half_power] += nf.value; return;
        }
    }

    NormalForm result() const {
        if (pole_) return NormalForm::pole();
        if (irreducible_) return NormalForm::irreducible();
        const Rational* value = nullptr;
        long long power = 0;
        int nonzero = 0;
        for (const auto& [k, v] : buckets_) {
            if (v.is_zero()) continue;
            ++nonzero;
            value = &v;
            power = k;
        }
        if (nonzero == 0) return NormalForm::zero();
        if (nonzero == 1) return NormalForm::finite(*value, power);
        // Mixed pi powers cannot be expressed as rational * pi^(k/2).
        return NormalForm::irreducible();
    }

private:
    bool pole_ = false;
    bool irreducible_ = false;
    std::map<long long, Rational> buckets_;
};

// Multiplies g by ((x)_{k/2})^exponent, the half-integer-index rising factorial
// as a formal gamma ratio.
void mul_poch_half(GammaProduct& g, const Rational& x, long k_halves, long long exponent) {
    g.mul_gamma(x + Rational(k_halves, 2), exponent);
    g.mul_gamma(x, -exponent);
}

} // namespace

Rational f21_2apj_even(long n, const Rational& a, long j, SignVariant v) {
    Rational c = Rational(2) * a + Rational(sign_factor(v) * j);
    require_prefactor_nonzero(c, 2 * n, "f21_2apj_even");
    Rational ad = a + Rational(delta_j(v, j));
    Rational sum(0);
    for (long r = 0; 2 * r <= j; ++r) {
        Int binom = binomial(Int(j), Int(2 * r));
        if (binom == 0) continue;
        Rational falling = pochhammer_int(Rational(-n), Int(r));
        if (falling.is_zero()) continue;
        Rational term = Rational(binom) * falling * pochhammer_int(ad, Int(n - r));
        if (r % 2 != 0) term = -term;
        sum += term;
    }
    return pow2(2 * n) * pochhammer_int(Rational(1, 2), Int(n)) /
           pochhammer_int(c, Int(2 * n)) * sum;
}

Rational f21_2apj_odd(long n, const Rational& a, long j, SignVariant v) {
    Rational c = Rational(2) * a + Rational(sign_factor(v) * j);
    require_prefactor_nonzero(c, 2 * n + 1, "f21_2apj_odd");
    Rational ad = a + Rational(delta_j(v, j));
    Rational sum(0);
    for (long r = 0; 2 * r + 1 <= j; ++r) {
        Int binom = binomial(Int(j), Int(2 * r + 1));
        if (binom == 0) continue;
        Rational falling = pochhammer_int(Rational(-n), Int(r));
        if (falling.is_zero()) continue;
        Rational term = Rational(binom) * falling * pochhammer_int(ad, Int(n - r));
        if (r % 2 != 0) term = -term;
        sum += term;
    }
    return Rational(sign_factor(v)) * pow2(2 * n) * pochhammer_int(Rational(3, 2), Int(n)) /
           pochhammer_int(c, Int(2 * n + 1)) * sum;
}

namespace {

// Shared sum of both "-2n +- j" forms: sum_r s^r C(j,r) (a/2+1/2-r/2)_m.
Rational t2_sum(const Rational& a, long j, long m, int term_sign) {
    Rational sum(0);
    Rational base = a / Rational(2) + Rational(1, 2);
    for (long r = 0; r <= j; ++r) {
        Rational term = Rational(binomial(Int(j), Int(r))) *
                        pochhammer_int(base - Rational(r, 2), Int(m));
        if (term_sign < 0 && r % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

// Prefactor of the "-2n + j" form, including the factorial replacement used
// once j exceeds 2n.
Rational t2_plus_prefactor(long n, long j) {
    if (j > n && j <= 2 * n) {
        std::ostringstream msg;
        msg << "f21_m2n_plus: j=" << j << " lies in the excluded interval [" << (n + 1)
            << ", " << 2 * n << "] where 2F1(-n, a; -2n+j; 2) is undefined";
        throw EvalError(ErrorKind::ExcludedDomain, msg.str());
    }
    if (j <= n)
        return pow2(2 * n - j) * Rational(factorial(Int(n - j))) /
               Rational(factorial(Int(2 * n - j)));
    Rational r = pow2(2 * n - j) * Rational(factorial(Int(j - 2 * n - 1))) /
                 Rational(factorial(Int(j - n - 1)));
    return (n % 2 == 0) ? r : -r;
}

} // namespace

Rational f21_m2n_plus(long n, const Rational& a, long j) {
    return t2_plus_prefactor(n, j) * t2_sum(a, j, n, +1);
}

Rational f21_m2n_minus(long n, const Rational& a, long j) {
    return pow2(2 * n + j) * Rational(factorial(Int(n))) /
           Rational(factorial(Int(2 * n + j))) * t2_sum(a, j, n + j, -1);
}

namespace {

Rational ab_ratio(const Rational& top, const Rational& bottom, long r, const char* what) {
    if (pochhammer_chain_vanishes(bottom, r)) {
        std::ostringstream msg;
        msg << what << ": denominator (" << bottom << ")_" << r << " vanishes";
        throw EvalError(ErrorKind::ParameterPole, msg.str());
    }
    return pochhammer_int(top, Int(r)) / pochhammer_int(bottom, Int(r));
}

} // namespace

Rational ab_coefficient_a(const Rational& a, long n, long j, long r) {
    Rational half_1ma = (Rational(1) - a) / Rational(2);
    return ab_ratio(half_1ma, half_1ma - Rational(n + j), r, "ab_coefficient_a");
}

Rational ab_coefficient_b(const Rational& a, long n, long j, long r) {
    Rational one_ma2 = Rational(1) - a / Rational(2);
    return ab_ratio(one_ma2, one_ma2 - Rational(n + j), r, "ab_coefficient_b");
}

namespace {

// The bracketed two-sum body shared by both alternative forms. shift is 0 for
// the "+j" family and j for the "-j" family; odd_sign carries the relative
// sign between the two sums.
Rational alt_body(long n, const Rational& a, long j, long shift, int odd_sign) {
    Rational even_sum(0), odd_sum(0);
    for (long r = 0; 2 * r <= j; ++r) {
        Int be = binomial(Int(j), Int(2 * r));
        if (be != 0) even_sum += Rational(be) * ab_coefficient_a(a, n, shift, r);
        Int bo = binomial(Int(j), Int(2 * r + 1));
        if (bo != 0) odd_sum += Rational(bo) * ab_coefficient_b(a, n, shift, r);
    }
    Rational half_a = a / Rational(2);
    long m = n + shift;
    Rational body = pochhammer_int(half_a + Rational(1, 2), Int(m)) * even_sum;
    Rational odd_part = pochhammer_int(half_a, Int(m)) * odd_sum;
    return odd_sign > 0 ? body + odd_part : body - odd_part;
}

} // namespace

Rational f21_alt_plus(long n, const Rational& a, long j) {
    Rational prefactor = t2_plus_prefactor(n, j);
    return prefactor * alt_body(n, a, j, 0, +1);
}

Rational f21_alt_minus(long n, const Rational& a, long j) {
    Rational prefactor = pow2(2 * n + j) * Rational(factorial(Int(n))) /
                         Rational(factorial(Int(2 * n + j)));
    return prefactor * alt_body(n, a, j, j, -1);
}

NormalForm kummer2_generalized(const Rational& alpha, const Rational& beta, long j,
                               SignVariant v) {
    const int s = sign_factor(v);
    Rational ha = alpha / Rational(2), hb = beta / Rational(2);
    Rational half(1, 2);

    GammaProduct prefactor;
    prefactor *= GammaProduct::sqrt_pi();
    prefactor.mul_gamma(ha + hb + half + Rational(s * j, 2), 1);
    prefactor.mul_gamma(ha + half, -1);
    prefactor.mul_gamma(hb + half, -1);
    prefactor.mul_gamma(ha - hb + half - Rational(s * j, 2), 1);
    prefactor.mul_gamma(ha - hb + half + Rational(j, 2), -1);

    NormalFormSum sum;
    for (long r = 0; r <= j; ++r) {
        GammaProduct term = prefactor;
        Rational coeff = Rational(binomial(Int(j), Int(r)));
        if (s > 0 && r % 2 != 0) coeff = -coeff;  // (-+1)^r
        term.mul_coeff(coeff);
        mul_poch_half(term, hb, r, 1);
        mul_poch_half(term, ha + half, r - j, -1);
        sum.add(gamma_normalize(term));
    }
    return sum.result();
}

NormalForm kummer3_generalized(const Rational& alpha, const Rational& gamma, long j,
                               SignVariant v) {
    const int s = sign_factor(v);
    Rational ha = alpha / Rational(2), hg = gamma / Rational(2);
    Rational half(1, 2);
    const long eps = epsilon_j(v, j);
    const long del = delta_j(v, j);

    GammaProduct prefactor(pow2(s * j));
    prefactor.mul_gamma(hg, 1);
    prefactor.mul_gamma(hg + half, 1);
    prefactor.mul_gamma(hg + ha, -1);
    prefactor.mul_gamma(hg - ha + half, -1);
    prefactor.mul_gamma(alpha - Rational(s * j), 1);
    prefactor.mul_gamma(alpha + Rational(eps), -1);

    NormalFormSum sum;
    for (long r = 0; r <= j; ++r) {
        GammaProduct term = prefactor;
        Rational coeff = Rational(binomial(Int(j), Int(r)));
        if (s > 0 && r % 2 != 0) coeff = -coeff;
        term.mul_coeff(coeff);
        mul_poch_half(term, hg - ha, r, 1);
        mul_poch_half(term, hg + ha, r - 2 * del, -1);
        sum.add(gamma_normalize(term));
    }
    return sum.result();
}

NormalForm kummer2_classic(const Rational& alpha, const Rational& beta) {
    Rational half(1, 2);
    GammaProduct g = GammaProduct::sqrt_pi();
    g.mul_gamma(alpha / Rational(2) + beta / Rational(2) + half, 1);
    g.mul_gamma(alpha / Rational(2) + half, -1);
    g.mul_gamma(beta / Rational(2) + half, -1);
    return gamma_normalize(g);
}

NormalForm kummer3_classic(const Rational& alpha, const Rational& gamma) {
    Rational half(1, 2);
    GammaProduct g;
    g.mul_gamma(gamma / Rational(2), 1);
    g.mul_gamma(gamma / Rational(2) + half, 1);
    g.mul_gamma(gamma / Rational(2) + alpha / Rational(2), -1);
    g.mul_gamma(gamma / Rational(2) - alpha / Rational(2) + half, -1);
    return gamma_normalize(g);
}

std::pair<Rational, Rational> transform_2_to_half(long n, const Rational& beta,
                                                  const Rational& gamma) {
    Rational lhs = hyp_terminating_sum({{Rational(-n), beta}, {gamma}, Rational(2), Int(n)});
    Rational inner = hyp_terminating_sum({{Rational(-n), Rational(1) - gamma - Rational(n)},
                                          {Rational(1) - beta - Rational(n)},
                                          Rational(1, 2),
                                          Int(n)});
    Rational rhs = Rational(-2).pow(n) * pochhammer_int(beta, Int(n)) /
                   pochhammer_int(gamma, Int(n)) * inner;
    return {lhs, rhs};
}

NormalForm f21_2a_closed(long n, const Rational& a) {
    Rational two_a = Rational(2) * a;
    require_prefactor_nonzero(two_a, n, "f21_2a_closed");
    GammaProduct g(pow2(n) / pochhammer_int(two_a, Int(n)));
    g *= GammaProduct::sqrt_pi();
    g.mul_gamma(Rational(1) - a, 1);
    g.mul_gamma(Rational(1, 2) - Rational(n, 2), -1);
    g.mul_gamma(Rational(1) - a - Rational(n, 2), -1);
    return gamma_normalize(g);
}

Rational samoletov_factorial_sum(long n) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k) {
        Rational term = Rational(double_factorial(Int(2 * k + 1))) /
                        Rational(factorial(Int(n - k)) * factorial(Int(k)) *
                                 factorial(Int(k + 1)));
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

NormalForm samoletov_branch_form(long n) {
    Rational hn(n, 2);
    GammaProduct g;
    if (n % 2 == 0) {
        g.mul_gamma(hn + Rational(1, 2), 1);
        g.mul_gamma(hn + Rational(1), -1);
    } else {
        g.mul_coeff(Rational(-1));
        g.mul_gamma(hn + Rational(1), 1);
        g.mul_gamma(hn + Rational(3, 2), -1);
    }
    g *= GammaProduct::sqrt_pi(-1);
    return gamma_normalize(g);
}

Rational samoletov_df_form_squared(long n) {
    Rational base = Rational(n + 1) *
                    Rational(double_factorial(Int(n - 1))).pow(2) /
                    Rational(double_factorial(Int(n))).pow(2);
    Rational envelope = Rational(1) / Rational(factorial(Int(n)) * factorial(Int(n + 1)));
    return envelope * (n % 2 == 0 ? base : base.reciprocal());
}

std::tuple<Rational, NormalForm, NormalForm> samoletov_check(long n) {
    if (n < 1) throw std::invalid_argument("samoletov_check: n must be positive");
    Rational inv_fact = Rational(1) / Rational(factorial(Int(n)));
    Rational s = samoletov_factorial_sum(n);
    NormalForm h = samoletov_branch_form(n) * NormalForm::finite(inv_fact);
    Rational f = hyp_terminating_sum(
        {{Rational(-n), Rational(3, 2)}, {Rational(2)}, Rational(2), Int(n)});
    return {s, h, NormalForm::finite(f * inv_fact)};
}

SeriesPoly confluent_expansion_coeffs(const Rational& a, long j, SignVariant v,
                                      std::size_t order) {
    Rational c = Rational(2) * a + Rational(sign_factor(v) * j);
    require_prefactor_nonzero(c, static_cast<long>(order), "confluent_expansion_coeffs");
    Rational ad = a + Rational(delta_j(v, j));

    SeriesPoly p(order);
    p[0] = Rational(1);
    for (std::size_t m = 1; m <= order; ++m) {
        long n = static_cast<long>(m) / 2;
        bool even = (m % 2 == 0);
        Rational sum(0);
        for (long r = 0; (even ? 2 * r : 2 * r + 1) <= j; ++r) {
            Int binom = binomial(Int(j), Int(even ? 2 * r : 2 * r + 1));
            if (binom == 0) continue;
            Rational falling = pochhammer_int(Rational(-n), Int(r));
            if (falling.is_zero()) continue;
            Rational term = Rational(binom) * falling * pochhammer_int(ad, Int(n - r));
            if (r % 2 != 0) term = -term;
            sum += term;
        }
        Rational coeff = sum / (pow2(static_cast<long>(m)) *
                                pochhammer_int(c, Int(static_cast<long>(m))) *
                                Rational(factorial(Int(n))));
        if (!even && v == SignVariant::Upper) coeff = -coeff;
        p[m] = coeff;
    }
    return p;
}

} // namespace hypsum
