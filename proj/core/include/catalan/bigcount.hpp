#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace catalan {

// Arbitrary-precision nonnegative count. The row counts grow like 8^n, so a
// fixed-width integer overflows around n = 22. Serialization is the plain
// decimal string.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& value);

// Parses a decimal string of digits. Throws std::invalid_argument on anything
// else (sign, whitespace, empty input).
BigCount bigcount_from_decimal(std::string_view text);

// Natural logarithm of a positive count, computed from mantissa and binary
// exponent so values far beyond double range stay representable.
// Throws std::domain_error for value <= 0.
double log_value(const BigCount& value);

}  // namespace catalan
