#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace segmarket {

enum class ErrorCode {
  IndexOutOfRange,
  ZeroMarket,
  EmptySupport,
  NegativeBound,
  PriceOutsideF,
  SegmentationMismatch,
  NoSupportInF,
  NonTermination,
  InfeasibleSet,
  EmptyAboveFloor,
  PointOutsideRegion,
  HypothesisViolated,
  BadRange,
  EmptyWindow,
  InvalidArgument,
  ParseError,
  InternalError,
};

std::string_view error_name(ErrorCode code);

/// Every contract violation in the library is reported through this type;
/// the code lets callers (and the CLI exit-code mapping) branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroMarket: return "ZeroMarket";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::NegativeBound: return "NegativeBound";
    case ErrorCode::PriceOutsideF: return "PriceOutsideF";
    case ErrorCode::SegmentationMismatch: return "SegmentationMismatch";
    case ErrorCode::NoSupportInF: return "NoSupportInF";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::InfeasibleSet: return "InfeasibleSet";
    case ErrorCode::EmptyAboveFloor: return "EmptyAboveFloor";
    case ErrorCode::PointOutsideRegion: return "PointOutsideRegion";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace segmarket
