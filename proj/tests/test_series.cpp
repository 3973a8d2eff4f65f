#include <gtest/gtest.h>

#include "duha/errors.hpp"
#include "duha/presets.hpp"
#include "duha/series.hpp"
#include "printers.hpp"

using namespace duha;

namespace {

LaurentSeries ints(int lo, std::initializer_list<long> values) {
  std::vector<Rational> c;
  for (long v : values) c.emplace_back(v);
  return LaurentSeries(lo, std::move(c));
}

// 1 + t^a + t^{2a} + ... on [lo, hi].
LaurentSeries geometric(int a, int lo, int hi) {
  LaurentSeries s(lo, hi);
  for (int e = 0; e <= hi; e += a) {
    if (e >= lo) s.set(e, 1);
  }
  return s;
}

}  // namespace

TEST(Series, Expansions) {
  EXPECT_EQ(RationalFunction(poly({1}), poly_mul(poly({1, 0, -1}), poly({1, -2, 1}))).expand(0, 6),
            ints(0, {1, 2, 4, 6, 9, 12, 16}));
  EXPECT_EQ(RationalFunction(poly({1, 2, 2}), poly({1, 0, -1})).expand(0, 6),
            ints(0, {1, 2, 3, 2, 3, 2, 3}));
  EXPECT_EQ(RationalFunction(poly({1}), poly({0, 0, 0, 0, 1, 0, -1})).expand(-4, 4),
            ints(-4, {1, 0, 1, 0, 1, 0, 1, 0, 1}));
}

TEST(Series, WindowDiscipline) {
  const LaurentSeries a(0, 4), b(0, 5);
  EXPECT_THROW(a + b, UsageError);
  EXPECT_THROW((void)(a == b), UsageError);
  EXPECT_THROW((void)a[5], UsageError);
  EXPECT_THROW((void)a[-3], UsageError);
  const LaurentSeries s = geometric(1, 0, 3).substitute_power(2);
  EXPECT_EQ(s.lo(), 0);
  EXPECT_EQ(s.hi(), 7);
  EXPECT_EQ(s, ints(0, {1, 0, 1, 0, 1, 0, 1, 0}));
}

TEST(Series, CauchyProduct) {
  // (1 + t)(1 - t) = 1 - t^2
  const LaurentSeries p = ints(0, {1, 1, 0, 0, 0}) * ints(0, {1, -1, 0, 0, 0});
  EXPECT_EQ(p, ints(0, {1, 0, -1, 0, 0}));
}

TEST(Series, LogExamples) {
  const LaurentSeries log_geom = log_series(geometric(1, 0, 5));
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(log_geom[m], Rational(1, m));
  EXPECT_EQ(log_series(ints(0, {1, 0, 0})), ints(0, {0, 0, 0}));
  EXPECT_THROW(log_series(ints(0, {2, 1})), DomainError);
}

TEST(Series, ExpInvertsLog) {
  const LaurentSeries f = RationalFunction(poly({1, 3, -1}), poly({1, -1, 0, 2})).expand(0, 12);
  EXPECT_EQ(exp_series(log_series(f)), f);
  const LaurentSeries g(0, {0, 1, Rational(-1, 3), 4, 0, 0, Rational(2, 7)});
  EXPECT_EQ(log_series(exp_series(g)), g);
}

TEST(Series, TotientLogSum) {
  LaurentSeries expected(0, 12);
  for (int e = 1; e <= 12; ++e) expected.set(e, -1);
  EXPECT_EQ(totient_log_sum(12), expected);
}

TEST(Series, IgusaSum) {
  const LaurentSeries chi = igusa_chi(12);
  EXPECT_EQ(chi[0], Rational(0));
  EXPECT_EQ(chi.restrict(1, 6), ints(1, {2, 3, 2, 3, 2, 3}));
  EXPECT_EQ(chi.restrict(1, 12), s1().expand(1, 12));
  LaurentSeries hilbert(0, 12);
  for (int e = 0; e <= 12; ++e) hilbert.set(e, dim_total(e));
  EXPECT_EQ(igusa_chi(hilbert, 12), chi);
}

TEST(Series, HomologyCatalog) {
  const CaseSpec f1 = resolve_preset("f1-rational");
  EXPECT_EQ(catalog_homology(f1, 0, 0, 6), ints(0, {1, 2, 3, 2, 3, 2, 3}));
  EXPECT_EQ(catalog_homology(f1, 3, 0, 12), LaurentSeries(0, 12));
  EXPECT_EQ(catalog_homology(resolve_preset("f2-generic"), 3, 0, 12),
            ints(0, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
  // f_4 + h_4 + s_2 as printed.
  EXPECT_EQ(catalog_homology(resolve_preset("f2-root-4"), 0, 0, 8),
            ints(0, {1, 2, 3, 2, 3, 2, 3, 2, 6}));
  EXPECT_THROW(catalog_item(custom_case(poly({0, 1}), poly({2}), RationalPolynomial{Rational(-1, 2)})),
               UnsupportedCase);
}

TEST(Series, CohomologyCatalog) {
  const CaseSpec f1 = resolve_preset("f1-rational");
  EXPECT_EQ(catalog_cohomology(f1, 0, -4, 4), ints(-4, {0, 0, 0, 0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(catalog_cohomology(f1, 1, -4, 4), ints(-4, {0, 0, 0, 0, 2, 0, 0, 0, 0}));
  EXPECT_EQ(catalog_cohomology(f1, 2, -4, 6), ints(-4, {0, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1}));
  EXPECT_THROW(catalog_cohomology(resolve_preset("f2-generic"), 0, 0, 4), UnsupportedCase);
}

TEST(Series, Goodwillie) {
  const LaurentSeries s = s1().expand(0, 12);
  const LaurentSeries zero(0, 12);
  const GoodwillieSeries f1 = goodwillie(s, zero);
  EXPECT_EQ(f1.hh1, s);
  EXPECT_EQ(f1.hh2, zero);
  EXPECT_TRUE(f1.consistent);

  const GoodwillieSeries empty = goodwillie(zero, zero);
  EXPECT_EQ(empty.hc1bar, Rational(-1) * s);
  EXPECT_FALSE(empty.consistent);

  const LaurentSeries hh3 = catalog_homology(resolve_preset("f2-generic"), 3, 0, 12);
  const LaurentSeries hh0bar = catalog_homology(resolve_preset("f2-generic"), 0, 0, 12) -
                               monomial_series(0, 1, 0, 12);
  EXPECT_EQ(goodwillie(hh0bar, hh3).hh2, Rational(2) * hh3);
}
