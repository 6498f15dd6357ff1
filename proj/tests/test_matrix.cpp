#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ncvif/datasets.hpp"
#include "ncvif/errors.hpp"
#include "ncvif/matrix.hpp"
#include "oracle.hpp"

using namespace ncvif;

namespace {

Matrix random_matrix(std::mt19937_64& eng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<double> v(rows * cols);
  for (auto& x : v) x = z(eng);
  return Matrix(rows, cols, v);
}

oracle::Columns columns_of(const Matrix& a) {
  oracle::Columns out;
  for (std::size_t c = 0; c < a.cols(); ++c) out.push_back(a.column_values(c));
  return out;
}

}  // namespace

TEST(Matrix, RejectsNonFiniteAndEmpty) {
  const std::vector<double> bad = {1.0, std::numeric_limits<double>::quiet_NaN()};
  EXPECT_THROW(Matrix(1, 2, bad), Error);
  const std::vector<double> inf = {std::numeric_limits<double>::infinity()};
  EXPECT_THROW(Matrix(1, 1, inf), Error);
  EXPECT_THROW(Matrix(0, 1, std::vector<double>{}), Error);
  EXPECT_THROW(Matrix(2, 2, std::vector<double>{1, 2, 3}), Error);
}

TEST(Matrix, RowMajorLayout) {
  const Matrix m(2, 3, std::vector<double>{1, 2, 3, 4, 5, 6});
  EXPECT_EQ(m(0, 2), 3.0);
  EXPECT_EQ(m(1, 0), 4.0);
  const Matrix dropped = m.without_column(1);
  EXPECT_EQ(dropped.cols(), 2u);
  EXPECT_EQ(dropped(1, 1), 6.0);
}

TEST(SolveLeastSquares, IdentitySystem) {
  const std::vector<double> b = {1, 2, 3};
  const auto sol = solve_least_squares(Matrix::identity(3), b);
  ASSERT_EQ(sol.coefficients.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(sol.coefficients[i], b[i], 1e-15);
  EXPECT_EQ(sol.rank, 3u);
  EXPECT_FALSE(sol.rank_deficient);
}

TEST(SolveLeastSquares, ConstantFit) {
  const Matrix ones{{1}, {1}, {1}};
  const auto sol = solve_least_squares(ones, std::vector<double>{2, 2, 2});
  EXPECT_NEAR(sol.coefficients[0], 2.0, 1e-15);
  EXPECT_NEAR(sol.residual_norm, 0.0, 1e-14);
}

TEST(SolveLeastSquares, MatchesNormalEquationsOracle) {
  std::mt19937_64 eng(20240601);
  const Matrix a = random_matrix(eng, 10, 3);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<double> b(10);
  for (auto& v : b) v = z(eng);
  const auto sol = solve_least_squares(a, b);
  const auto expected = oracle::normal_equations(columns_of(a), b);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(sol.coefficients[i], expected[i], 1e-8);
}

TEST(SolveLeastSquares, RandomSystemsAgreeWithOracleAndResidualsAreOrthogonal) {
  std::mt19937_64 eng(7);
  std::uniform_int_distribution<std::size_t> cols_dist(1, 6);
  std::normal_distribution<double> z(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = cols_dist(eng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(k + 2, 50)(eng);
    const Matrix a = random_matrix(eng, n, k);
    std::vector<double> b(n);
    for (auto& v : b) v = z(eng);
    const auto sol = solve_least_squares(a, b);
    const auto expected = oracle::normal_equations(columns_of(a), b);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_LE(std::abs(sol.coefficients[i] - expected[i]), 1e-8 * std::max(1.0, std::abs(expected[i])))
          << "trial " << trial;
    }
    const auto fitted = a.multiply(sol.coefficients);
    for (std::size_t c = 0; c < k; ++c) {
      double ate = 0.0;
      for (std::size_t r = 0; r < n; ++r) ate += a(r, c) * (b[r] - fitted[r]);
      EXPECT_NEAR(ate, 0.0, 1e-8) << "trial " << trial;
    }
  }
}

TEST(SolveLeastSquares, RankDeficientReturnsMinimumNorm) {
  // Two identical columns: every (c, 2 - c) fits exactly, the minimum-norm one is (1, 1).
  const Matrix a{{1, 1}, {2, 2}, {3, 3}};
  const auto sol = solve_least_squares(a, std::vector<double>{2, 4, 6});
  EXPECT_TRUE(sol.rank_deficient);
  EXPECT_EQ(sol.rank, 1u);
  EXPECT_NEAR(sol.coefficients[0], 1.0, 1e-12);
  EXPECT_NEAR(sol.coefficients[1], 1.0, 1e-12);
  EXPECT_NEAR(sol.residual_norm, 0.0, 1e-12);
}

TEST(SolveLeastSquares, RankToleranceIsRelativeToLargestPivot) {
  const Matrix a{{1, 0}, {0, 1e-12}, {0, 0}};
  EXPECT_EQ(solve_least_squares(a, std::vector<double>{1, 1, 0}).rank, 1u);
  EXPECT_EQ(solve_least_squares(a, std::vector<double>{1, 1, 0}, 1e-14).rank, 2u);
  EXPECT_EQ(numerical_rank(a), 1u);
}

TEST(SolveLeastSquares, Preconditions) {
  const Matrix a{{1, 2}, {3, 4}};
  EXPECT_THROW(solve_least_squares(a, std::vector<double>{1, 2, 3}), Error);
  const Matrix wide(1, 2, std::vector<double>{1, 2});
  try {
    solve_least_squares(wide, std::vector<double>{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewObservations);
  }
  try {
    solve_least_squares(a, std::vector<double>{1, std::numeric_limits<double>::infinity()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFiniteInput);
  }
}

TEST(CrossProduct, CountsRowsOfOnes) {
  const Matrix ones = Matrix::column(std::vector<double>(5, 1.0));
  const Matrix g = cross_product(ones, ones);
  ASSERT_EQ(g.rows(), 1u);
  ASSERT_EQ(g.cols(), 1u);
  EXPECT_EQ(g(0, 0), 5.0);
}

TEST(CrossProduct, IdentityTimesIdentity) {
  const Matrix g = cross_product(Matrix::identity(2), Matrix::identity(2));
  EXPECT_EQ(g(0, 0), 1.0);
  EXPECT_EQ(g(0, 1), 0.0);
  EXPECT_EQ(g(1, 1), 1.0);
}

TEST(CrossProduct, BelsleyX2SumOfSquares) {
  const auto x2 = belsley().column("X2");
  double expected = 0.0;
  for (double v : x2) expected += v * v;
  const Matrix col = Matrix::column(x2);
  EXPECT_NEAR(cross_product(col, col)(0, 0), expected, 1e-12 * expected);
}

TEST(CrossProduct, TransposeSymmetry) {
  std::mt19937_64 eng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(eng, 12, 3);
    const Matrix b = random_matrix(eng, 12, 4);
    const Matrix ab = cross_product(a, b);
    const Matrix ba = cross_product(b, a);
    ASSERT_EQ(ab.rows(), 3u);
    ASSERT_EQ(ab.cols(), 4u);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(ab(i, j), ba(j, i), 1e-12);
  }
}

TEST(CrossProduct, DimensionMismatch) {
  try {
    cross_product(Matrix::identity(2), Matrix::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}
