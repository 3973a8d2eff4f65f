#ifndef DUHA_POLYNOMIAL_HPP
#define DUHA_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "duha/rational.hpp"

namespace duha {

/// Dense polynomial over Q, lowest degree first. The zero polynomial is the
/// empty vector; every function here returns trimmed results.
using RationalPolynomial = std::vector<Rational>;

void trim(RationalPolynomial& p);
RationalPolynomial trimmed(RationalPolynomial p);

/// Degree of p, -1 for the zero polynomial.
int degree(const RationalPolynomial& p);

RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_scale(const RationalPolynomial& a, const Rational& c);

/// Euclidean division a = q*b + r with deg r < deg b. Throws DivisionByZero
/// when b is zero.
std::pair<RationalPolynomial, RationalPolynomial> poly_divmod(const RationalPolynomial& a,
                                                              const RationalPolynomial& b);

/// t^n - 1
RationalPolynomial t_power_minus_one(int n);

/// n-th cyclotomic polynomial, built as (t^n - 1) / prod_{d | n, d < n} Phi_d
/// by exact division.
RationalPolynomial cyclotomic(int n);

/// Euler's totient by direct count of k in [1, n] coprime to n.
int totient(int n);

/// Small helper for literals: {1, 0, -1} -> 1 - t^2.
RationalPolynomial poly(std::initializer_list<long> coeffs);

/// Human readable rendering in the variable `var`.
std::string to_string(const RationalPolynomial& p, const std::string& var = "t");

}  // namespace duha

#endif  // DUHA_POLYNOMIAL_HPP
