#include "dpg/error.hpp"

namespace dpg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidStubbornness: return "InvalidStubbornness";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::NoPairExists: return "NoPairExists";
    case ErrorCode::AlgorithmInvariantViolated: return "AlgorithmInvariantViolated";
    case ErrorCode::AllStubborn: return "AllStubborn";
    case ErrorCode::NotGood: return "NotGood";
    case ErrorCode::NotMajorityZero: return "NotMajorityZero";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidScript: return "InvalidScript";
    case ErrorCode::Not2P2N: return "Not2P2N";
    case ErrorCode::Not3SAT: return "Not3SAT";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ReductionMismatch: return "ReductionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

InvariantViolation::InvariantViolation(std::string invariant,
                                       const std::string& detail)
    : Error(ErrorCode::AlgorithmInvariantViolated, invariant + ": " + detail),
      invariant_(std::move(invariant)) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dpg
