#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpg {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical text: "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace qpg
