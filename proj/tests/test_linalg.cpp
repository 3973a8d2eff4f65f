#include <gtest/gtest.h>

#include <random>

#include "duha/errors.hpp"
#include "duha/field.hpp"
#include "duha/linalg.hpp"

using namespace duha;
using Matrix = MatrixX<FieldElement>;
using Vector = VectorX<FieldElement>;

namespace {

Matrix random_matrix(std::mt19937& rng, int rows, int cols, int rank_bound) {
  // Product of a rows x r and an r x cols matrix has rank <= r.
  std::uniform_int_distribution<int> c(-3, 3);
  Matrix left(rows, rank_bound), right(rank_bound, cols);
  for (int r = 0; r < rows; ++r)
    for (int s = 0; s < rank_bound; ++s) left(r, s) = FieldElement(Rational(c(rng), 1 + (r + s) % 2));
  for (int r = 0; r < rank_bound; ++r)
    for (int s = 0; s < cols; ++s) right(r, s) = c(rng);
  return left * right;
}

}  // namespace

TEST(Linalg, RankExamples) {
  EXPECT_EQ(rank(Matrix::Zero(3, 3)), 0);
  EXPECT_EQ(rank(Matrix::Identity(4, 4)), 4);
  Matrix opposite(2, 2);
  opposite << FieldElement(Rational(1, 2)), FieldElement(Rational(-1, 2)), FieldElement(Rational(-5, 2)),
      FieldElement(Rational(5, 2));
  EXPECT_EQ(rank(opposite), 1);
}

TEST(Linalg, KernelExamples) {
  EXPECT_TRUE(kernel_basis(Matrix::Identity(3, 3)).empty());
  Matrix ones(1, 2);
  ones << 1, 1;
  const auto k = kernel_basis(ones);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0](0), FieldElement(-1));
  EXPECT_EQ(k[0](1), FieldElement(1));
}

TEST(Linalg, ImageMembership) {
  const Matrix zero = Matrix::Zero(2, 2);
  EXPECT_TRUE(in_image(zero, Vector(Vector::Zero(2))));
  Vector v = Vector::Zero(2);
  v(1) = 1;
  EXPECT_FALSE(in_image(zero, v));
  EXPECT_THROW(in_image(zero, Vector(Vector::Zero(3))), UsageError);
}

TEST(Linalg, HomologyDim) {
  EXPECT_EQ(homology_dim(Matrix::Zero(4, 0), Matrix::Zero(0, 4)), 4);
  EXPECT_THROW(homology_dim(Matrix::Zero(3, 1), Matrix::Zero(0, 4)), UsageError);
  // d_out * d_in != 0 can give a negative count.
  EXPECT_THROW(homology_dim(Matrix::Identity(1, 1), Matrix::Identity(1, 1)), ConsistencyError);
}

TEST(Linalg, RankNullityAndRoundTrips) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    const int r = std::min({rows, cols, dim(rng)});
    const Matrix m = random_matrix(rng, rows, cols, r);
    const auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + static_cast<Eigen::Index>(k.size()), cols);
    EXPECT_LE(rank(m), r);
    EXPECT_EQ(rank(m), rank(Matrix(m.transpose())));
    for (const auto& v : k) EXPECT_TRUE(is_zero_matrix(Vector(m * v)));
    Vector x(cols);
    for (int p = 0; p < cols; ++p) x(p) = c(rng);
    const Vector y = m * x;
    const auto sol = solve_exact(m, y);
    ASSERT_TRUE(sol.has_value());
    EXPECT_TRUE(is_zero_matrix(Vector(m * *sol - y)));
  }
}

TEST(Linalg, WorksOverNumberFields) {
  const auto f = std::make_shared<const NumberField>(poly({1, 0, 1}));
  const FieldElement i = FieldElement::generator(f);
  Matrix m(2, 2);
  m << 1, i, i, -1;  // second row is i times the first
  EXPECT_EQ(rank(m), 1);
  EXPECT_EQ(kernel_basis(m).size(), 1u);
}
