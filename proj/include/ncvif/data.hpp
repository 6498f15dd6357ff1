#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ncvif {

// Immutable table of named numeric columns, all of length n >= 2.
// Constant columns are legal (an explicit ones column is one).
class DataMatrix {
 public:
  DataMatrix(std::vector<std::string> names, std::vector<std::vector<double>> columns);

  std::size_t n() const { return columns_.front().size(); }
  std::size_t column_count() const { return names_.size(); }
  const std::vector<std::string>& column_names() const { return names_; }

  bool has(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws UnknownColumn
  std::span<const double> column(const std::string& name) const;
  std::span<const double> column(std::size_t index) const { return columns_.at(index); }

  // Copy with an extra column appended.
  DataMatrix with_column(std::string name, std::vector<double> values) const;

  friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

struct ModelSpec {
  std::string dependent;
  std::vector<std::string> regressors;
  bool intercept = true;

  // Checks the structural invariants and that every name exists in `data`.
  void validate(const DataMatrix& data) const;
};

bool is_constant(std::span<const double> values);
double mean(std::span<const double> values);
double sum_of_squares(std::span<const double> values);

}  // namespace ncvif
