#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fos {

/// Exact rational scalar. Every LP value, cost and threshold goes through this.
using Rat = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Decimal rendering with a fixed number of fractional digits (display only).
std::string to_decimal(const Rat& r, int digits = 6);

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected.
Rat parse_rat(std::string_view text);

Rat make_rat(long num, long den = 1);

bool is_integral(const Rat& r);

Rat sum(std::span<const Rat> values);

/// Least common multiple of all denominators.
mpz_class common_denominator(std::span<const Rat> values);

}  // namespace fos
