#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

// Coordinates are 64-bit; anything that counts lattice points of products
// (box sizes, k-th powers, rational slack) goes through arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Render as "p/q" ("p" when q == 1). This is the exact wire format used in
/// JSON reports and CSV cells.
std::string rational_to_string(const Rational& r);

/// Inverse of rational_to_string; also accepts plain integers.
Rational rational_from_string(const std::string& s);

Rational rational_pow(const Rational& base, unsigned exp);

Int binomial(std::uint64_t n, std::uint64_t k);

/// a + b with overflow check on int64 coordinates.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace sumsetlab
