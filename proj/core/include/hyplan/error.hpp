#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyplan {

enum class ErrorCode {
  kInvalidArgument,
  kEmptySolutionPair,
  kEmptyOperand,
  kEndpointMismatch,
  kInvalidDuration,
  kStartNotInFlowSet,
  kStateNotInJumpSet,
  kEmptyInitialSet,
  kStateOutOfBounds,
  kSamplingExhausted,
  kNoQualifyingVertex,
  kNoActiveVertex,
  kUnknownMotion,
};

std::string_view to_string(ErrorCode code);

/// Exception type thrown by every hyplan operation that can fail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyplan
