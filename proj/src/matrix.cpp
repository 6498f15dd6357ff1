#include "ncvif/matrix.hpp"

#include <cmath>
#include <string>

#include "ncvif/errors.hpp"

namespace ncvif {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteInput, std::string(what) + " contains a non-finite entry");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::span<const double> row_major) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidArgument, "matrix must have at least one row and one column");
  if (row_major.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(rows * cols) + " values, got " +
                                                  std::to_string(row_major.size()));
  }
  values_.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) values_(r, c) = row_major[r * cols + c];
  validate();
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.begin()->size();
  if (n == 0 || m == 0) throw Error(ErrorKind::InvalidArgument, "matrix must have at least one row and one column");
  values_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (double v : row) values_(r, c++) = v;
    ++r;
  }
  validate();
}

Matrix::Matrix(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0)
    throw Error(ErrorKind::InvalidArgument, "matrix must have at least one row and one column");
  validate();
}

void Matrix::validate() const {
  if (!values_.allFinite()) throw Error(ErrorKind::NonFiniteInput, "matrix contains a non-finite entry");
}

Matrix Matrix::identity(std::size_t n) {
  return Matrix(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
}

Matrix Matrix::from_columns(const std::vector<std::span<const double>>& columns) {
  if (columns.empty()) throw Error(ErrorKind::InvalidArgument, "no columns");
  const std::size_t n = columns.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) throw Error(ErrorKind::DimensionMismatch, "columns differ in length");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return Matrix(std::move(m));
}

Matrix Matrix::column(std::span<const double> values) { return from_columns({values}); }

Matrix Matrix::without_column(std::size_t c) const {
  if (cols() < 2) throw Error(ErrorKind::InvalidArgument, "cannot drop the only column");
  if (c >= cols()) throw Error(ErrorKind::DimensionMismatch, "column index out of range");
  Eigen::MatrixXd out(values_.rows(), values_.cols() - 1);
  const auto ci = static_cast<Eigen::Index>(c);
  out.leftCols(ci) = values_.leftCols(ci);
  out.rightCols(values_.cols() - ci - 1) = values_.rightCols(values_.cols() - ci - 1);
  return Matrix(std::move(out));
}

Vector Matrix::column_values(std::size_t c) const {
  if (c >= cols()) throw Error(ErrorKind::DimensionMismatch, "column index out of range");
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = values_(r, c);
  return out;
}

Vector Matrix::multiply(std::span<const double> x) const {
  if (x.size() != cols()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match column count");
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
  Eigen::VectorXd y = values_ * xv;
  return Vector(y.data(), y.data() + y.size());
}

LeastSquaresSolution solve_least_squares(const Matrix& a, std::span<const double> b, double rank_tolerance) {
  if (a.rows() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "system has " + std::to_string(a.rows()) + " rows but rhs has " + std::to_string(b.size()));
  }
  if (a.rows() < a.cols()) {
    throw Error(ErrorKind::TooFewObservations,
                std::to_string(a.rows()) + " rows for " + std::to_string(a.cols()) + " unknowns");
  }
  require_finite(b, "right-hand side");

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a.eigen().rows(), a.eigen().cols());
  cod.setThreshold(rank_tolerance);
  cod.compute(a.eigen());

  Eigen::Map<const Eigen::VectorXd> bv(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXd x = cod.solve(bv);

  LeastSquaresSolution out;
  out.coefficients.assign(x.data(), x.data() + x.size());
  out.rank = static_cast<std::size_t>(cod.rank());
  out.rank_deficient = out.rank < a.cols();
  out.residual_norm = (bv - a.eigen() * x).norm();
  return out;
}

std::size_t numerical_rank(const Matrix& a, double rank_tolerance) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a.eigen().rows(), a.eigen().cols());
  qr.setThreshold(rank_tolerance);
  qr.compute(a.eigen());
  return static_cast<std::size_t>(qr.rank());
}

Matrix cross_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "cross product of " + std::to_string(a.rows()) + "-row and " + std::to_string(b.rows()) + "-row matrices");
  }
  return Matrix(Eigen::MatrixXd(a.eigen().transpose() * b.eigen()));
}

}  // namespace ncvif
