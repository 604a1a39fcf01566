#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace macc {

// Operational failures. Model defects are reported as Diagnostics instead.
enum class ErrorCode {
  kIoError,
  kUnknownRootType,
  kUnknownComponentType,
  kRecursiveComposition,
  kDanglingBoundary,
  kUnresolvedInstance,
  kUnresolvedImplementation,
  kNotAbstract,
  kUnknownGenerator,
  kRoleMissing,
  kDuplicateRole,
  kWriteError,
  kUnboundInstance,
  kAmbiguousFactory,
  kNotFullyModeled,
  kRteMismatch,
  kMissingScript,
  kUnsupportedStub,
  kInvalidScenario,
  kConflictingDrivers,
  kTypeFault,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace macc
