#pragma once

#include <gmpxx.h>

#include <string>

namespace stanleychar {

/// Arbitrary-precision integer used for every character value.
using Integer = mpz_class;

/// Arbitrary-precision rational; coefficients of exact polynomials.
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

/// Canonical decimal text: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& value) { return value.get_str(); }

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace stanleychar
