#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curveinv {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation; parse_rational canonicalizes
// on input.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "n", "-n" and "n/d" with decimal digits. Throws Error(Parse).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace curveinv
