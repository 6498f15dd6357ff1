#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncvif {

enum class ErrorKind {
  InvalidArgument,
  NonFiniteInput,
  DimensionMismatch,
  TooFewObservations,
  RankDeficient,
  UnknownColumn,
  ZeroTotalSumOfSquares,
  NotCenteredModel,
  ConstantRegressor,
  ZeroColumn,
  PerfectCollinearity,
  NoConstantColumn,
  ParseError,
  DuplicateHeader,
  RaggedRow,
  NonFiniteValue,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncvif
