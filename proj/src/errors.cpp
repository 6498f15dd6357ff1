#include "ncvif/errors.hpp"

namespace ncvif {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooFewObservations: return "TooFewObservations";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::UnknownColumn: return "UnknownColumn";
    case ErrorKind::ZeroTotalSumOfSquares: return "ZeroTotalSumOfSquares";
    case ErrorKind::NotCenteredModel: return "NotCenteredModel";
    case ErrorKind::ConstantRegressor: return "ConstantRegressor";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::PerfectCollinearity: return "PerfectCollinearity";
    case ErrorKind::NoConstantColumn: return "NoConstantColumn";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateHeader: return "DuplicateHeader";
    case ErrorKind::RaggedRow: return "RaggedRow";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ncvif
