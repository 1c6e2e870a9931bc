#include "hypsum/pochhammer.hpp"

#include <sstream>

namespace hypsum {

Int factorial(const Int& n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n.get_ui());
    return r;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

Int double_factorial(const Int& m) {
    if (m < 0) throw std::domain_error("double_factorial: negative argument");
    Int r = 1;
    for (Int x = m; x >= 2; x -= 2) r *= x;
    return r;
}

Rational pochhammer_int(const Rational& a, const Int& m) {
    Rational r(1);
    if (m >= 0) {
        Rational x = a;
        for (Int i = 0; i < m; ++i) {
            r *= x;
            x += Rational(1);
        }
        return r;
    }
    // (a)_{-k} = 1 / ((a-1)(a-2)...(a-k))
    Rational x = a;
    for (Int i = 0; i < -m; ++i) {
        x -= Rational(1);
        if (x.is_zero()) {
            std::ostringstream msg;
            msg << "pochhammer_int: factor a-" << (i + 1) << " vanishes evaluating ("
                << a << ")_" << m;
            throw EvalError(ErrorKind::DivisionByZero, msg.str());
        }
        r *= x;
    }
    return r.reciprocal();
}

std::pair<Rational, Rational> duplication_split_even(const Rational& a, const Int& n) {
    return {pochhammer_int(a, n), pochhammer_int(a + Rational(1, 2), n)};
}

} // namespace hypsum
