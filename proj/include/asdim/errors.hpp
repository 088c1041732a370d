#pragma once

#include <stdexcept>
#include <string>

namespace asdim {

enum class ErrorCode {
  InvalidEdge,
  InvalidVertex,
  InvalidArgument,
  NotAnEdge,
  NotAcyclic,
  DegreeBound,
  EmptyFolnerSet,
  InvalidGenerator,
  InvalidMass,
  NotASubrelation,
  DichotomyViolation,
  ConditionsFailed,
  AnchorConflict,
  NotFunctionalGraph,
  InsufficientInvariance,
  NotNested,
  IncompletePartition,
  ParseError,
  Overflow,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace asdim
