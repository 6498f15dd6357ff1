#include "ncvif/data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ncvif/errors.hpp"

namespace ncvif {

DataMatrix::DataMatrix(std::vector<std::string> names, std::vector<std::vector<double>> columns)
    : names_(std::move(names)), columns_(std::move(columns)) {
  if (names_.empty()) throw Error(ErrorKind::InvalidArgument, "data has no columns");
  if (names_.size() != columns_.size()) throw Error(ErrorKind::DimensionMismatch, "names and columns differ in count");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw Error(ErrorKind::DuplicateHeader, "duplicate column name '" + name + "'");
  }
  const std::size_t rows = columns_.front().size();
  if (rows < 2) throw Error(ErrorKind::TooFewObservations, "need at least 2 observations");
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column '" + names_[c] + "' has wrong length");
    for (double v : columns_[c]) {
      if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteInput, "column '" + names_[c] + "' has a non-finite value");
    }
  }
}

bool DataMatrix::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t DataMatrix::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorKind::UnknownColumn, "no column named '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::span<const double> DataMatrix::column(const std::string& name) const { return columns_[index_of(name)]; }

DataMatrix DataMatrix::with_column(std::string name, std::vector<double> values) const {
  auto names = names_;
  auto columns = columns_;
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
  return DataMatrix(std::move(names), std::move(columns));
}

void ModelSpec::validate(const DataMatrix& data) const {
  if (regressors.empty()) throw Error(ErrorKind::InvalidArgument, "model has no regressors");
  data.index_of(dependent);
  std::set<std::string> seen;
  for (const auto& r : regressors) {
    data.index_of(r);
    if (r == dependent) throw Error(ErrorKind::InvalidArgument, "dependent '" + r + "' also listed as a regressor");
    if (!seen.insert(r).second) throw Error(ErrorKind::InvalidArgument, "regressor '" + r + "' listed twice");
  }
}

bool is_constant(std::span<const double> values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

double mean(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sum_of_squares(std::span<const double> values) {
  return std::inner_product(values.begin(), values.end(), values.begin(), 0.0);
}

}  // namespace ncvif
