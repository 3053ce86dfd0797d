#include "hyplan/error.hpp"

namespace hyplan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptySolutionPair: return "EmptySolutionPair";
    case ErrorCode::kEmptyOperand: return "EmptyOperand";
    case ErrorCode::kEndpointMismatch: return "EndpointMismatch";
    case ErrorCode::kInvalidDuration: return "InvalidDuration";
    case ErrorCode::kStartNotInFlowSet: return "StartNotInFlowSet";
    case ErrorCode::kStateNotInJumpSet: return "StateNotInJumpSet";
    case ErrorCode::kEmptyInitialSet: return "EmptyInitialSet";
    case ErrorCode::kStateOutOfBounds: return "StateOutOfBounds";
    case ErrorCode::kSamplingExhausted: return "SamplingExhausted";
    case ErrorCode::kNoQualifyingVertex: return "NoQualifyingVertex";
    case ErrorCode::kNoActiveVertex: return "NoActiveVertex";
    case ErrorCode::kUnknownMotion: return "UnknownMotion";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hyplan
