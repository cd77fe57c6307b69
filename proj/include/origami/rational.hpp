#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace origami {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form (den > 0, gcd 1).
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "7", "-3/4" and decimal notation such as "0.001" or "-1.25e-3".
// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace origami
