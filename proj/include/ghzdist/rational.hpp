// Exact rational arithmetic helpers shared by every module.  All
// probabilities in this library are mpq rationals end to end; floating
// point only appears once entropies are taken (see real.hpp).

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ghzdist {

using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, unsigned long exp);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// x * (x-1) * ... * (x-k+1)
Int falling_factorial(const Int& x, unsigned long k);

// Number of partitions of n into exactly k positive parts.
Int partitions_exact(unsigned long n, unsigned long k);

// Accepts "a/b" (b > 0) or a terminating decimal literal ("1", "0.8097",
// ".5").  Anything else, including scientific notation, is rejected so
// that inputs stay exact.
std::optional<Rat> parse_rational(std::string_view text);

std::string to_string(const Rat& value);

// Round to `digits` decimal places, ties to even.
Rat round_half_even(const Rat& value, unsigned digits);

// Fixed-point decimal rendering of round_half_even(value, digits).
std::string to_fixed_decimal(const Rat& value, unsigned digits);

}  // namespace ghzdist
