#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace isostrat {

/// Exact rational number. gmpxx keeps values canonical (lowest terms,
/// positive denominator) through every arithmetic operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Rejects zero denominators, decimals and
/// anything else that is not an exact rational literal.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

Scalar dot(const Vector& a, const Vector& b);

/// Lexicographic comparison, usable as a strict weak order.
bool lex_less(const Vector& a, const Vector& b);

} // namespace isostrat
