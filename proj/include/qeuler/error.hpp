#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qeuler {

enum class ErrorCode {
  DivisionByNonUnit,
  IndexOutOfRange,
  OrderMismatch,
  CapExceeded,
  NegativeExponent,
  NotInClass,
  UnknownRow,
  UnknownExpr,
  MalformedPartition,
  CellOutside,
  BadEndpoints,
  FlavorMismatch,
  DepthTooSmall,
  HypothesisFailed,
  NoDecomposition,
  NotUnique,
  RowIncomplete,
  UnknownIdentity,
  BadFlag,
  ParseError,
  InvalidScheme,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (tests, the CLI) can branch on the kind without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::UnknownRow: return "UnknownRow";
    case ErrorCode::UnknownExpr: return "UnknownExpr";
    case ErrorCode::MalformedPartition: return "MalformedPartition";
    case ErrorCode::CellOutside: return "CellOutside";
    case ErrorCode::BadEndpoints: return "BadEndpoints";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::RowIncomplete: return "RowIncomplete";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::BadFlag: return "BadFlag";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
  }
  return "Unknown";
}

}  // namespace qeuler
