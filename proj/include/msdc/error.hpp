#pragma once

#include <stdexcept>
#include <string>

namespace msdc {

enum class ErrorCode {
  kOrderOutOfRange,
  kNonpositiveHorizon,
  kShapeMismatch,
  kSizeMismatch,
  kOrderTooSmall,
  kSingularMatrix,
  kDerivativeOrderOutOfRange,
  kNonfiniteValue,
  kInternalConsistency,
  kUnknownMatrix,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace msdc
