#include "prym/rational.hpp"

#include <stdexcept>

namespace prym {

Integer ipow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Rational pow2(long e) {
    if (e >= 0) return Rational(ipow2(static_cast<unsigned long>(e)));
    return make_rational(1, ipow2(static_cast<unsigned long>(-e)));
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace prym
