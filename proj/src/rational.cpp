#include "nefcone/rational.hpp"

#include <cctype>

#include "nefcone/error.hpp"

namespace nefcone {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  }
  return Rational(num) / Rational(den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  Integer num{std::string(num_part)};
  Integer den{std::string(den_part)};
  if (den == 0) {
    throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) {
    num = -num;
  }
  return make_rational(num, den);
}

int sign(const Rational& value) { return value.sign(); }
int sign(const Integer& value) { return value.sign(); }

Integer common_denominator(const std::vector<Rational>& values) {
  Integer result = 1;
  for (const auto& v : values) {
    result = boost::multiprecision::lcm(result, Integer(boost::multiprecision::denominator(v)));
  }
  return result;
}

std::vector<Integer> make_primitive(std::vector<Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = boost::multiprecision::gcd(g, v);
  }
  if (g > 1) {
    for (auto& v : values) {
      v /= g;
    }
  }
  return values;
}

}  // namespace nefcone
