#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ncvif {

using Vector = std::vector<double>;

// Dense real matrix with finite entries only. Backed by Eigen storage;
// the row-major constructor is the logical layout seen by callers.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::span<const double> row_major);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  explicit Matrix(Eigen::MatrixXd values);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<std::span<const double>>& columns);
  static Matrix column(std::span<const double> values);

  std::size_t rows() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values_.cols()); }
  double operator()(std::size_t r, std::size_t c) const { return values_(r, c); }

  Matrix transpose() const { return Matrix(Eigen::MatrixXd(values_.transpose())); }
  // Copy with column `c` removed. Requires cols() >= 2.
  Matrix without_column(std::size_t c) const;
  Vector column_values(std::size_t c) const;
  Vector multiply(std::span<const double> x) const;

  const Eigen::MatrixXd& eigen() const { return values_; }

 private:
  void validate() const;
  Eigen::MatrixXd values_;
};

inline constexpr double kDefaultRankTolerance = 1e-10;

struct LeastSquaresSolution {
  Vector coefficients;
  std::size_t rank = 0;
  double residual_norm = 0.0;
  bool rank_deficient = false;
};

// Minimum-norm least-squares solution of A x ≈ b via a column-pivoted
// complete orthogonal decomposition. A pivot counts towards the rank when
// |R_ii| >= rank_tolerance * max |R_ii|. Rank deficiency is reported in the
// result, not thrown.
LeastSquaresSolution solve_least_squares(const Matrix& a, std::span<const double> b,
                                         double rank_tolerance = kDefaultRankTolerance);

// Numerical rank under the same pivot test used by solve_least_squares.
std::size_t numerical_rank(const Matrix& a, double rank_tolerance = kDefaultRankTolerance);

// AᵀB.
Matrix cross_product(const Matrix& a, const Matrix& b);

}  // namespace ncvif
