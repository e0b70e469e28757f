#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace trigfour {

// Exact coefficient arithmetic for the whole library. Integer carries
// binomial-sized values (up to ~2^300 in the test sweeps); Rational is the
// coefficient field of every expansion. Both are GMP-backed and always
// canonical (rationals reduced, denominator positive).
using Integer = mpz_class;
using Rational = mpq_class;

/// C(n,k). Zero for k < 0 or k > n; a negative n is a domain error.
Integer binomial(long n, long k);

/// 2^e for e >= 0.
Integer pow2(long e);

/// 2^e as a rational, e of either sign.
Rational pow2_rational(long e);

/// num/den reduced to lowest terms with a positive denominator.
Rational make_rational(Integer num, Integer den);

/// Canonical "p" or "p/q" rendering (mpq string form).
std::string rational_to_string(const Rational& r);

/// Inverse of rational_to_string; rejects anything else.
Rational rational_from_string(const std::string& s);

}  // namespace trigfour
