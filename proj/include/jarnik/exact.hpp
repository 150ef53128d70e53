#pragma once

// Exact arithmetic helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jarnik {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", an integer, or a finite decimal ("0.125", "-3.5e-2") into an exact rational.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Always renders "p/q", including integers ("3/1").
std::string to_string(const Rational& q);

/// The exact binary value of a finite double.
Rational exact_from_double(double x);
Rational exact_from_long_double(long double x);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

std::int64_t to_int64(const BigInt& z);  // throws InvalidInput when out of range

inline double to_double(const Rational& q) { return q.get_d(); }

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double x);

}  // namespace jarnik
