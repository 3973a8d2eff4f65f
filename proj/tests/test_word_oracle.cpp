#include <gtest/gtest.h>

#include <random>

#include "duha/errors.hpp"
#include "duha/presets.hpp"
#include "duha/word_oracle.hpp"
#include "printers.hpp"

using namespace duha;
using namespace duha::oracle;

namespace {

WordCombination single(const Word& w, const FieldElement& c = 1) { return {{w, c}}; }

}  // namespace

TEST(WordOracle, RewriteRules) {
  const FieldElement a = 5, b = -6;
  EXPECT_EQ(reduce_word("ddu", a, b), (WordCombination{{"dud", a}, {"udd", b}}));
  EXPECT_EQ(reduce_word("duu", a, b), (WordCombination{{"udu", a}, {"uud", b}}));
  EXPECT_EQ(reduce_word("ud", a, b), single("ud"));
  EXPECT_EQ(reduce_combination({{"ud", 2}}, a, b), single("ud", 2));
  WordCombination twice;
  add_to(twice, "ud", 2);
  add_to(twice, "ud", 3);
  EXPECT_EQ(twice, single("ud", 5));
}

TEST(WordOracle, NormalWordsAndInversions) {
  EXPECT_TRUE(is_normal("uududd"));
  EXPECT_TRUE(is_normal("dudu"));
  EXPECT_FALSE(is_normal("uddu"));
  EXPECT_EQ(inversions("ddu"), 2);
  EXPECT_EQ(inversions("uudd"), 0);
  EXPECT_THROW(reduce_word("uxd", 1, 1), UsageError);
}

TEST(WordOracle, ReducedWordsAreNormalAndConfluent) {
  const DownUpAlgebra A(resolve_preset("f2-root-3"));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len(0, 9), letter(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    const int n = len(rng);
    for (int p = 0; p < n; ++p) w += letter(rng) ? 'u' : 'd';
    const auto left = reduce_word(w, A.spec().alpha, A.spec().beta, Strategy::Leftmost);
    const auto right = reduce_word(w, A.spec().alpha, A.spec().beta, Strategy::Rightmost);
    EXPECT_EQ(left, right) << w;
    for (const auto& [v, c] : left) {
      EXPECT_TRUE(is_normal(v)) << v;
      EXPECT_EQ(v.size(), w.size());
    }
  }
}

TEST(WordOracle, WordExpansion) {
  const CaseSpec f1 = resolve_preset("f1-rational");
  EXPECT_EQ(word_expansion({1, 0, 1}, f1), single("ud"));
  EXPECT_EQ(word_expansion({0, 1, 0}, f1), (WordCombination{{"ud", -6}, {"du", 2}}));
  EXPECT_EQ(word_expansion({0, 2, 0}, f1),
            (WordCombination{{"udud", 36}, {"uddu", -12}, {"duud", -12}, {"dudu", 4}}));
}

TEST(WordOracle, ToPbwElement) {
  const DownUpAlgebra A(resolve_preset("f1-rational"));
  AlgebraElement du(Monomial{0, 1, 0}, Rational(1, 2));
  du.add_term({1, 0, 1}, 3);  // (1/r1) w1 - (beta/r1) ud
  EXPECT_EQ(to_pbw_element(single("du"), A), du);
  EXPECT_EQ(to_pbw_element(single("ud"), A), AlgebraElement(Monomial{1, 0, 1}));
  EXPECT_EQ(to_pbw_element(single("dudu"), A), A.multiply(du, du));
}

TEST(WordOracle, PermutationRelationThroughWords) {
  const DownUpAlgebra A(resolve_preset("f1-rational"));
  const CaseSpec& c = A.spec();
  const auto lhs = reduce_combination(concatenate(word_expansion({0, 1, 0}, c), single("u")),
                                      c.alpha, c.beta);
  WordCombination rhs;
  for (const auto& [w, x] : word_expansion({1, 1, 0}, c)) add_to(rhs, w, x * A.r1());
  EXPECT_EQ(lhs, reduce_combination(rhs, c.alpha, c.beta));
}

TEST(WordOracle, AgreesWithEngineOnAllSmallProducts) {
  for (const auto& name : {"f1-rational", "f2-root-4", "f2-root-1"}) {
    const DownUpAlgebra A(resolve_preset(name));
    const CaseSpec& c = A.spec();
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 2; ++k)
          for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 1; ++q)
              for (int r = 0; r <= 2; ++r) {
                const Monomial x{i, j, k}, y{p, q, r};
                const auto words = concatenate(word_expansion(x, c), word_expansion(y, c));
                EXPECT_EQ(to_pbw_element(reduce_combination(words, c.alpha, c.beta), A),
                          A.multiply(x, y))
                    << name << ' ' << to_string(x) << " * " << to_string(y);
              }
  }
}
