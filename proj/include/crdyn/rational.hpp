#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace crdyn {

// Exact rationals backed by GMP. mpq_class keeps values canonical as long as
// every constructed value goes through parse_rational or arithmetic.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

// Reduced "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

inline Rational abs_diff(const Rational& a, const Rational& b) { return a < b ? Rational(b - a) : Rational(a - b); }

} // namespace crdyn
