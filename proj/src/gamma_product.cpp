#include "hypsum/gamma_product.hpp"

#include "hypsum/errors.hpp"

#include <sstream>
#include <vector>

namespace hypsum {

Rational NormalForm::rational_value() const {
    if (tag == NormalTag::Zero) return Rational(0);
    if (tag == NormalTag::Finite && pi_half_power == 0) return value;
    throw std::domain_error("NormalForm: no plain rational value (" + str() + ")");
}

std::string NormalForm::str() const {
    switch (tag) {
        case NormalTag::Zero: return "0";
        case NormalTag::Pole: return "pole";
        case NormalTag::Irreducible: return "irreducible";
        case NormalTag::Finite: break;
    }
    if (pi_half_power == 0) return value.str();
    std::ostringstream os;
    os << value.str() << "*pi^";
    if (pi_half_power % 2 == 0) os << pi_half_power / 2;
    else os << "(" << pi_half_power << "/2)";
    return os.str();
}

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
    if (a.tag == NormalTag::Zero || b.tag == NormalTag::Zero) {
        if (a.tag == NormalTag::Pole || b.tag == NormalTag::Pole)
            throw std::domain_error("NormalForm: zero * pole is undefined");
        return NormalForm::zero();
    }
    if (a.tag == NormalTag::Pole || b.tag == NormalTag::Pole) return NormalForm::pole();
    if (a.tag == NormalTag::Irreducible || b.tag == NormalTag::Irreducible)
        return NormalForm::irreducible();
    return NormalForm::finite(a.value * b.value, a.pi_half_power + b.pi_half_power);
}

namespace {

// Gamma(m + 1/2) = r * sqrt(pi) with exact rational r, any integer m.
Rational gamma_half_rational(const Int& m) {
    Rational r(1);
    if (m >= 0) {
        Rational x(1, 2);
        for (Int i = 0; i < m; ++i) {
            r *= x;
            x += Rational(1);
        }
    } else {
        // Gamma(x) = Gamma(x+1)/x walking down from 1/2.
        Rational x(1, 2);
        for (Int i = 0; i < -m; ++i) {
            x -= Rational(1);
            r /= x;
        }
    }
    return r;
}

struct ClassReduction {
    long long order = 0;   // epsilon order contributed by this residue class
    Rational finite{1};    // finite coefficient
    long long pi_halves = 0;
    bool irreducible = false;
};

// Reduce one residue class (arguments differing by integers) over its minimal
// argument via Gamma(anchor + m) = (anchor)_m Gamma(anchor), tracking zero
// factors of the chains and the pole order of Gamma(anchor)^E separately so
// matched zeros and poles cancel as a joint limit.
ClassReduction reduce_class(const std::vector<std::pair<Rational, long long>>& members) {
    ClassReduction out;
    const Rational& anchor = members.front().first;
    long long total_exp = 0;

    for (const auto& [arg, exp] : members) {
        total_exp += exp;
        Int m = (arg - anchor).to_integer();
        // (anchor + t) for t in [0, m): multiply nonzero factors, count zeros.
        Rational x = anchor;
        for (Int t = 0; t < m; ++t) {
            if (x.is_zero()) {
                out.order += exp;
            } else {
                out.finite *= x.pow(exp);
            }
            x += Rational(1);
        }
    }

    if (total_exp == 0) return out;

    if (anchor.is_integer()) {
        Int n = anchor.to_integer();
        if (n >= 1) {
            out.finite *= Rational(factorial(Int(n - 1))).pow(total_exp);
        } else {
            // Gamma(-k + eps) ~ ((-1)^k / k!) / eps
            Int k = -n;
            Rational lead = Rational((k % 2 == 0) ? 1 : -1) / Rational(factorial(k));
            out.finite *= lead.pow(total_exp);
            out.order -= total_exp;
        }
    } else if (anchor.is_half_integer_lattice()) {
        Int m = (anchor - Rational(1, 2)).to_integer();
        out.finite *= gamma_half_rational(m).pow(total_exp);
        out.pi_halves = total_exp;
    } else {
        out.irreducible = true;
    }
    return out;
}

} // namespace

NormalForm gamma_normalize(const GammaProduct& g) {
    if (g.coeff().is_zero()) return NormalForm::zero();

    // Partition factors by fractional part; only integer-offset arguments interact.
    std::map<Rational, std::vector<std::pair<Rational, long long>>> classes;
    for (const auto& [arg, exp] : g.factors())
        classes[arg.frac()].emplace_back(arg, exp);  // map iteration is sorted, so
                                                     // each class lists ascending args

    long long order = 0;
    long long pi_halves = 0;
    Rational value = g.coeff();
    bool irreducible = false;

    for (const auto& [frac, members] : classes) {
        ClassReduction red = reduce_class(members);
        order += red.order;
        pi_halves += red.pi_halves;
        value *= red.finite;
        irreducible = irreducible || red.irreducible;
    }

    if (order < 0) return NormalForm::pole();
    if (order > 0) return NormalForm::zero();
    if (irreducible) return NormalForm::irreducible();
    return NormalForm::finite(value, pi_halves);
}

bool operator==(const GammaProduct& a, const GammaProduct& b) {
    return gamma_normalize(a) == gamma_normalize(b);
}

GammaProduct pochhammer_half(const Rational& a, const HalfInteger& k) {
    GammaProduct g;
    if (k.twice == 0) return g;
    g.mul_gamma(a + k.value(), 1);
    g.mul_gamma(a, -1);
    return g;
}

} // namespace hypsum
