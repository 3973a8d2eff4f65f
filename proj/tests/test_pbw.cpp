#include <gtest/gtest.h>

#include <random>

#include "duha/errors.hpp"
#include "duha/presets.hpp"
#include "printers.hpp"

using namespace duha;

namespace {

const Monomial kU{1, 0, 0};
const Monomial kD{0, 0, 1};
const Monomial kW{0, 1, 0};

AlgebraElement el(const Monomial& m, const FieldElement& c = 1) { return AlgebraElement(m, c); }

AlgebraElement random_element(std::mt19937& rng, int max_exp = 2) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<int> c(-3, 3);
  AlgebraElement x;
  for (int t = 0; t < 3; ++t) x.add_term({e(rng), e(rng), e(rng)}, c(rng));
  return x;
}

class AllPresets : public ::testing::TestWithParam<std::string> {
 protected:
  DownUpAlgebra A{resolve_preset(GetParam())};
};

}  // namespace

TEST(Pbw, PhiValues) {
  const DownUpAlgebra A(resolve_preset("f1-rational"));
  EXPECT_EQ(A.phi(-1), FieldElement(0));
  EXPECT_EQ(A.phi(0), FieldElement(1));
  EXPECT_EQ(A.phi(2), FieldElement(19));
  EXPECT_THROW(A.phi(-2), UsageError);
}

TEST(Pbw, StraighteningExamples) {
  const DownUpAlgebra A(resolve_preset("f1-rational"));
  // d u = (1/r1) w1 + r2 ud
  AlgebraElement du = el(kW, Rational(1, 2));
  du.add_term({1, 0, 1}, 3);
  EXPECT_EQ(A.multiply(kD, kU), du);
  EXPECT_EQ(A.multiply(kW, kU), el({1, 1, 0}, 2));
  // d u^2 = (5/2) u w1 + 9 u^2 d
  AlgebraElement du2 = el({1, 1, 0}, Rational(5, 2));
  du2.add_term({2, 0, 1}, 9);
  EXPECT_EQ(A.multiply(kD, Monomial{2, 0, 0}), du2);
}

TEST(Pbw, GradedBasis) {
  EXPECT_EQ(graded_basis({2, 0}), (std::vector<Monomial>{{0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(graded_basis({1, 1}), (std::vector<Monomial>{{1, 0, 0}}));
  EXPECT_TRUE(graded_basis({3, 2}).empty());
  EXPECT_EQ(dim_bigraded({2, 2}), 1);
  EXPECT_EQ(dim_bigraded({4, 0}), 3);
  const int expected[] = {1, 2, 4, 6, 9, 12, 16};
  for (int deg = 0; deg <= 6; ++deg) EXPECT_EQ(dim_total(deg), expected[deg]);
}

TEST(Pbw, SigmaExamples) {
  const DownUpAlgebra f1(resolve_preset("f1-rational"));
  EXPECT_EQ(f1.sigma(f1.w1()), f1.w1());
  // (-1/beta)^2 (-beta) = (1/36) * 6 for beta = -6.
  EXPECT_EQ(f1.sigma(el({2, 0, 1})), el({2, 0, 1}, Rational(1, 6)));
  const DownUpAlgebra f2(resolve_preset("f2-generic"));
  EXPECT_EQ(f2.sigma(f2.u()), f2.u());
}

TEST(Pbw, ToString) {
  EXPECT_EQ(to_string(Monomial{0, 0, 0}), "1");
  EXPECT_EQ(to_string(Monomial{1, 2, 0}), "u w^2");
  EXPECT_EQ(to_string(Monomial{0, 0, 1}), "d");
}

TEST_P(AllPresets, DefiningRelationsHold) {
  const AlgebraElement u = A.u(), d = A.d();
  const FieldElement& a = A.spec().alpha;
  const FieldElement& b = A.spec().beta;
  const auto m = [&](const AlgebraElement& x, const AlgebraElement& y) { return A.multiply(x, y); };
  EXPECT_EQ(m(d, m(d, u)), a * m(d, m(u, d)) + b * m(u, m(d, d)));
  EXPECT_EQ(m(d, m(u, u)), a * m(u, m(d, u)) + b * m(u, m(u, d)));
}

TEST_P(AllPresets, WRootsCommuteWithGenerators) {
  const AlgebraElement u = A.u(), d = A.d();
  const struct {
    AlgebraElement w;
    FieldElement r;
  } ws[] = {{A.w1(), A.r1()}, {A.w2(), A.r2()}};
  for (const auto& [w, r] : ws) {
    EXPECT_EQ(A.multiply(w, u), r * A.multiply(u, w));
    EXPECT_EQ(A.multiply(d, w), r * A.multiply(w, d));
  }
  EXPECT_EQ(A.multiply(A.w1(), A.w2()), A.multiply(A.w2(), A.w1()));
}

TEST_P(AllPresets, Associativity) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
    EXPECT_EQ(A.multiply(A.multiply(x, y), z), A.multiply(x, A.multiply(y, z)));
  }
}

TEST_P(AllPresets, UnitAndGrading) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> e(0, 3);
    const Monomial x{e(rng), e(rng), e(rng)}, y{e(rng), e(rng), e(rng)};
    EXPECT_EQ(A.multiply(A.one(), el(x)), el(x));
    EXPECT_EQ(A.multiply(el(x), A.one()), el(x));
    const AlgebraElement p = A.multiply(x, y);
    ASSERT_FALSE(p.is_zero());  // domain
    EXPECT_EQ(p.bidegree(), x.bidegree() + y.bidegree());
  }
}

TEST_P(AllPresets, SigmaIsMultiplicative) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement x = random_element(rng), y = random_element(rng);
    EXPECT_EQ(A.sigma(A.multiply(x, y)), A.multiply(A.sigma(x), A.sigma(y)));
  }
}

INSTANTIATE_TEST_SUITE_P(Presets, AllPresets, ::testing::ValuesIn(preset_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s) {
                             if (ch == '-') ch = '_';
                           }
                           return s;
                         });

TEST(Pbw, W1W2IsCentralWhenBetaIsMinusOne) {
  // w1 w2 commutes with u and d exactly when r1 r2 = 1.
  for (const std::string name : {"f2-generic", "f2-root-3", "f1-rational"}) {
    const DownUpAlgebra A(resolve_preset(name));
    const AlgebraElement c = A.multiply(A.w1(), A.w2());
    const bool central = A.multiply(c, A.u()) == A.multiply(A.u(), c) &&
                         A.multiply(c, A.d()) == A.multiply(A.d(), c);
    EXPECT_EQ(central, A.spec().beta == FieldElement(-1)) << name;
  }
}

TEST(Pbw, Classification) {
  EXPECT_EQ(resolve_preset("f1-rational").family, Family::F1);
  EXPECT_EQ(resolve_preset("f2-generic").family, Family::F2NonRoot);
  for (int n : {1, 2, 3, 4, 6}) {
    const CaseSpec c = resolve_preset("f2-root-" + std::to_string(n));
    EXPECT_EQ(c.family, Family::F2Root);
    EXPECT_EQ(c.n, n);
    EXPECT_EQ(c.beta, FieldElement(-1));
  }
  EXPECT_EQ(resolve_preset("f2-root-4").alpha, FieldElement(0));
  EXPECT_EQ(resolve_preset("f2-root-1").alpha, FieldElement(2));
  EXPECT_EQ(resolve_preset("f1-rational").alpha, FieldElement(5));
  EXPECT_EQ(resolve_preset("f1-rational").beta, FieldElement(-6));
  EXPECT_THROW(resolve_preset("f3"), UsageError);
  // r1 = 2, r2 = -1/2: (r1 r2)^2 = 1 breaks genericity and beta = 1.
  EXPECT_EQ(custom_case(poly({0, 1}), poly({2}), RationalPolynomial{Rational(-1, 2)}).family,
            Family::Unclassified);
}
