#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodge {

// Canonicalized GMP rationals: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "a" or "a/b" with optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Euler characteristic of O(c) on projective N-space, valid for every integer c.
Integer euler_char_line_bundle(int n_proj, long twist);

}  // namespace hodge
