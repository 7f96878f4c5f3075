#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tnncert {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or a plain integer. Throws std::invalid_argument on
/// malformed input or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q" when the denominator is not 1, otherwise the integer alone.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n

}  // namespace tnncert
