#pragma once

// Exact rational coefficients. GMP already keeps mpq_class values in
// canonical form (gcd(num, den) = 1, den > 0, 0 represented as 0/1), which
// is exactly the invariant the rest of the library relies on.

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "pfaff/errors.hpp"

namespace pfaff {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational_from_parts(const Integer& num, const Integer& den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d" with an optional leading sign.
inline Rational rational_from_string(std::string_view text) {
    std::string s(text);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw Error("malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw Error("rational with zero denominator '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

// gcd of numerators over lcm of denominators; the "content" of a coefficient
// list. Result is non-negative.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return rational_from_parts(num, den);
}

} // namespace pfaff
