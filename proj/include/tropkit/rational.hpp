#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tropkit {

/// Exact rational number, always kept in canonical (lowest terms, positive
/// denominator) form.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p". Decimal notation, empty strings and zero
/// denominators are rejected with InputError.
Rational parse_rational(std::string_view text);

/// Canonical string: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

bool is_integer(const Rational& q);
/// Requires is_integer(q) and that the value fits.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const BigInt& z);

Rational floor(const Rational& q);

}  // namespace tropkit
