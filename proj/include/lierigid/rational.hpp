#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lierigid {

/// Exact rational number. GMP keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact conversion; throws std::domain_error if q is not an integer that
/// fits in 64 bits.
int64_t to_int64(const Rational& q);

} // namespace lierigid
