#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace clifan {

/// Exact scalar field for every coefficient in the library.
/// mpq_class keeps values canonical (lowest terms, positive denominator)
/// as long as canonicalize() runs after construction from raw parts.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace clifan
