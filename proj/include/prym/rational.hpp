#pragma once

#include <gmpxx.h>

#include <string>

namespace prym {

// All coefficient arithmetic is exact. GMP keeps rationals canonical
// (lowest terms, positive denominator) through arithmetic; the helpers
// below canonicalize the few construction paths that do not.
using Integer = mpz_class;
using Rational = mpq_class;

// 2^e as an integer, e >= 0.
Integer ipow2(unsigned long e);

// 2^e as an exact rational; e may be negative (e.g. 2^{g-5} = 1/4 at g = 3).
Rational pow2(long e);

// num/den in canonical form; throws std::invalid_argument on zero den.
Rational make_rational(const Integer& num, const Integer& den);

// canonical rendering: "p" when the denominator is 1, otherwise "p/q", q > 0.
std::string to_string(const Rational& x);

// inverse of to_string; accepts "p" and "p/q". Throws std::invalid_argument.
Rational rational_from_string(const std::string& s);

bool is_integral(const Rational& x);

}  // namespace prym
