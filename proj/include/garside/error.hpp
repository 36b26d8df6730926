#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace garside {

enum class ErrorCode {
  UnknownFamily,
  RankOutOfRange,
  NonSpherical,
  OrderOverflow,
  GroupMismatch,
  EmptySubset,
  ReducibleSubset,
  ImproperSubset,
  UnknownGenerator,
  ParseError,
  CapExceeded,
  SameVertex,
  PreconditionViolated,
  NotFoundWithinRadius,
  IdentityInput,
  NotAnAbsorptionPair,
  ZeroLength,
  UniverseTooSmall,
  DisconnectedInput,
  RepresentativeMissing,
  RankTooSmall,
  IndexOutOfRange,
  NotPureAtStrandOne,
  NotFoundWithinSearch,
  Io,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this type; `code()` is stable
// and is what the CLI maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace garside
