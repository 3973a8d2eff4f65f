#include <gtest/gtest.h>

#include <random>

#include "duha/errors.hpp"
#include "duha/polynomial.hpp"
#include "duha/rational.hpp"

using namespace duha;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational(" -3/6 "), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(Rational(5, 6)), "5/6");
}

TEST(Rational, RejectsGarbage) {
  EXPECT_THROW(parse_rational("x"), UsageError);
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational(""), UsageError);
}

TEST(Rational, ExactSum) { EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6)); }

TEST(Polynomial, DivmodRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    RationalPolynomial a, b;
    for (int e = 0; e < 6; ++e) a.push_back(coeff(rng));
    for (int e = 0; e < 3; ++e) b.push_back(coeff(rng));
    b.push_back(1 + trial % 3);
    trim(a);
    const auto [q, r] = poly_divmod(a, b);
    EXPECT_LT(degree(r), degree(b));
    EXPECT_EQ(poly_add(poly_mul(q, b), r), a);
  }
  EXPECT_THROW(poly_divmod(poly({1, 1}), {}), DivisionByZero);
}

TEST(Polynomial, Cyclotomic) {
  EXPECT_EQ(cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic(3), poly({1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), poly({1, -1, 1}));
}

TEST(Polynomial, CyclotomicProductIsTnMinusOne) {
  for (int n = 1; n <= 24; ++n) {
    RationalPolynomial prod = poly({1});
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod = poly_mul(prod, cyclotomic(d));
    }
    EXPECT_EQ(prod, t_power_minus_one(n)) << n;
    EXPECT_EQ(degree(cyclotomic(n)), totient(n)) << n;
  }
}

TEST(Polynomial, Totient) {
  EXPECT_EQ(totient(1), 1);
  EXPECT_EQ(totient(4), 2);
  EXPECT_EQ(totient(6), 2);
  EXPECT_EQ(totient(12), 4);
  // Gauss: sum over divisors of phi(d) is n.
  for (int n = 1; n <= 60; ++n) {
    int sum = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) sum += totient(d);
    }
    EXPECT_EQ(sum, n);
  }
}
