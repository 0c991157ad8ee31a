#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toploc {

enum class ErrorCode {
  RingMismatch,
  NotDivisible,
  Arity,
  Budget,
  Unsupported,
  InvalidDecomposition,
  UnsupportedSingularity,
  Precondition,
  Syntax,
  UnknownIdentifier,
  TypeMismatch,
  Internal,
};

/// Stable machine-readable name, e.g. "BUDGET" or "INVALID_DECOMPOSITION".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toploc
