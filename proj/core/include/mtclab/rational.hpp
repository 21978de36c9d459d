#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mtclab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
[[nodiscard]] std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with optional leading '-'; throws InputError otherwise
/// or when q = 0.
[[nodiscard]] Rational parse_rational(std::string_view text);

}  // namespace mtclab
