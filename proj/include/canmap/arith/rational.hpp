#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace canmap {

using Integer = mpz_class;

// Canonical rationals: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

// Accepts "a" or "a/b" with an optional leading sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Residue of q modulo p; throws std::domain_error if p divides the denominator.
std::uint32_t rational_mod(const Rational& q, std::uint32_t p);

}  // namespace canmap
