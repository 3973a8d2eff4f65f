#ifndef DUHA_RATIONAL_HPP
#define DUHA_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace duha {

// Expression templates off: keeps Rational usable as a plain value type inside
// Eigen matrices and std containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" (whitespace tolerated). Throws UsageError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace duha

#endif  // DUHA_RATIONAL_HPP
