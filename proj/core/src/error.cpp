#include "macc/error.hpp"

namespace macc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUnknownRootType: return "UnknownRootType";
    case ErrorCode::kUnknownComponentType: return "UnknownComponentType";
    case ErrorCode::kRecursiveComposition: return "RecursiveComposition";
    case ErrorCode::kDanglingBoundary: return "DanglingBoundary";
    case ErrorCode::kUnresolvedInstance: return "UnresolvedInstance";
    case ErrorCode::kUnresolvedImplementation: return "UnresolvedImplementation";
    case ErrorCode::kNotAbstract: return "NotAbstract";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kRoleMissing: return "RoleMissing";
    case ErrorCode::kDuplicateRole: return "DuplicateRole";
    case ErrorCode::kWriteError: return "WriteError";
    case ErrorCode::kUnboundInstance: return "UnboundInstance";
    case ErrorCode::kAmbiguousFactory: return "AmbiguousFactory";
    case ErrorCode::kNotFullyModeled: return "NotFullyModeled";
    case ErrorCode::kRteMismatch: return "RteMismatch";
    case ErrorCode::kMissingScript: return "MissingScript";
    case ErrorCode::kUnsupportedStub: return "UnsupportedStub";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kConflictingDrivers: return "ConflictingDrivers";
    case ErrorCode::kTypeFault: return "TypeFault";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace macc
