#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpg {

enum class ErrorCode {
  InvalidStubbornness,
  EvenN,
  InvalidK,
  NoPairExists,
  AlgorithmInvariantViolated,
  AllStubborn,
  NotGood,
  NotMajorityZero,
  BudgetExceeded,
  TooLarge,
  InvalidScript,
  Not2P2N,
  Not3SAT,
  InvalidParams,
  ReductionMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the CLI
// maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a branch precondition of the constructive algorithms fails.
// `invariant` is a short stable id such as "obstruction-side".
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail);

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void check_invariant(bool ok, std::string_view invariant,
                            const std::string& detail) {
  if (!ok) throw InvariantViolation(std::string(invariant), detail);
}

}  // namespace dpg
