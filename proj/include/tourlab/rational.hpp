#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tourlab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a/b" or "a" (optionally signed) into a canonicalized rational.
/// Throws Error(BadParameters) on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// "a/b" in lowest terms; integers print without a denominator.
std::string to_string(const Rational& q);

BigInt to_bigint(__int128 v);

}  // namespace tourlab
