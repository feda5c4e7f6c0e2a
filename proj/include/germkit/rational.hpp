#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace germkit {

// Every quantity in the library is exact; mpq_class is kept canonical.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q", or "p" when the value is integral.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", "-p/q"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

// Reduced denominator as a machine integer.
std::int64_t denominator_of(const Rational& r);

bool is_integral(const Rational& r);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Floor division and non-negative remainder for a positive modulus.
std::int64_t floor_div(std::int64_t a, std::int64_t m);
std::int64_t mod_pos(std::int64_t a, std::int64_t m);

}  // namespace germkit
