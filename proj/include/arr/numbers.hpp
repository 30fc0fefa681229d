#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace arr {

// Exact arithmetic only: every number in this library is an arbitrary-precision
// integer, a reduced rational, or a residue mod a prime.  No floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer binomial(long n, long k);
Integer factorial(long n);
bool is_prime(std::int64_t p);

// Parses "p", "-p", or "p/q" with q > 0 after reduction.
std::optional<Rational> parse_rational(const std::string& s);

// Prints "p" or "p/q".
std::string to_string(const Rational& q);

// Clears denominators and divides by the content; first nonzero entry made
// positive.  Zero vectors are returned unchanged.
std::vector<Rational> primitive_vector(std::vector<Rational> v);

}  // namespace arr
