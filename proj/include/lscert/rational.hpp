#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace lscert {

// Exact arithmetic used everywhere outside quasi-isometry fitting.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// 3^e for any integer exponent (negative exponents give exact fractions).
Rational pow3(int e);

Rational pow_rational(const Rational& base, unsigned e);

double to_double(const Rational& q);

// Canonical text form: plain decimal for integers, "p/q" otherwise.
std::string rat_to_string(const Rational& q);

// Accepts "p", "p/q" and plain decimals like "0.4". Returns nullopt on junk.
std::optional<Rational> rat_from_string(const std::string& text);

// Floor of sqrt for nonnegative integers; exact.
Int isqrt_floor(const Int& n);

Int rational_floor(const Rational& q);

// If q is the square of a rational, return that (nonnegative) square root.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace lscert
