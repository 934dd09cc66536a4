#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nambu {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace nambu
