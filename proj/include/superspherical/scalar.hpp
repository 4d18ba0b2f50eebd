#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superspherical {

// Exact rational coefficient. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar &s);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Scalar parse_scalar(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

} // namespace superspherical
