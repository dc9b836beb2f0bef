#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& q);

/// True when q is an integer n with n >= 0.
bool is_nonnegative_integer(const Rational& q);

}  // namespace holo
