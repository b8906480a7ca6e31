#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycorr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// Binomial coefficient C(n, k) in the polynomial extension
/// n(n-1)...(n-k+1)/k!, defined for every integer n (negative included).
BigInt binomial_ext(const BigInt& n, unsigned k);

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

/// Floor of a rational.
BigInt rat_floor(const BigRat& q);

/// Representative of q mod 1 in [0, 1).
BigRat mod1(const BigRat& q);

bool is_integer(const BigRat& q);

double to_double(const BigRat& q);
double to_double(const BigInt& n);

/// Checked narrowing; throws std::overflow_error when out of range.
long long to_ll(const BigInt& n);

std::string rat_str(const BigRat& q);          // "p/q" or "p"
BigRat rat_parse(std::string_view s);           // accepts "p", "p/q", "-p/q"

BigInt lcm_ll(const BigInt& a, const BigInt& b);

}  // namespace polycorr
