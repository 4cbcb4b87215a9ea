#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ruzsakit {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class LogBase { two, e };

// Parses "p/q" or "p" (optional leading '-'); rejects decimals, exponents and
// zero denominators. The result is canonical (reduced, positive denominator).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

double log_in(double x, LogBase base);

// Logarithm of an arbitrary-precision positive integer, accurate to double
// precision even when the value overflows a double.
double log_in(const BigInt& z, LogBase base);

// Exact a^e for a nonnegative exponent that fits in 64 bits.
BigInt pow(const BigInt& a, std::uint64_t e);
Rational pow(const Rational& a, std::uint64_t e);

BigInt lcm(const BigInt& a, const BigInt& b);

// Converts to uint64, throwing std::overflow_error if it does not fit.
std::uint64_t to_u64(const BigInt& z);

}  // namespace ruzsakit
