#include "duha/rational.hpp"

#include <cctype>

#include "duha/errors.hpp"

namespace duha {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Integer parse_integer(const std::string& digits, std::string_view original) {
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (start == digits.size()) {
    throw UsageError("malformed rational: '" + std::string(original) + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw UsageError("malformed rational: '" + std::string(original) + "'");
    }
  }
  return Integer(digits[0] == '+' ? digits.substr(1) : digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));
  const Integer num = parse_integer(s.substr(0, slash), text);
  const Integer den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace duha
