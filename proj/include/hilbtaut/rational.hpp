#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hilbtaut {

/// Exact rational scalar. GMP keeps every result of mpq arithmetic canonical
/// (lowest terms, positive denominator); values parsed from text are
/// canonicalized on entry.
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& q);

/// "p/q" always, the form used in human-readable tables.
std::string to_fraction_string(const BigRational& q);

/// Accepts "p", "-p", "p/q". Throws Error(parse) on malformed text or q == 0.
BigRational parse_rational(std::string_view text);

BigRational rational(long num, long den = 1);

/// C(a, k) = a (a-1) ... (a-k+1) / k! for any rational a and k >= 0; zero for k < 0.
BigRational binomial(const BigRational& a, long k);

BigInteger factorial(long n);

BigRational power(const BigRational& base, long exponent);

}  // namespace hilbtaut
