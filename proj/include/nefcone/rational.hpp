#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace nefcone {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Reduced p/q with positive denominator. Throws InvalidArgument on q == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/// `p/q` when the denominator exceeds one, a bare integer otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts `[-]digits` or `[-]digits/digits`; throws SyntaxError otherwise.
Rational parse_rational(std::string_view text);

int sign(const Rational& value);
int sign(const Integer& value);

/// Least common multiple of all denominators (1 for an empty range).
Integer common_denominator(const std::vector<Rational>& values);

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
std::vector<Integer> make_primitive(std::vector<Integer> values);

}  // namespace nefcone
