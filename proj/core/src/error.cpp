#include "toploc/error.hpp"

namespace toploc {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::NotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::Arity: return "ARITY";
    case ErrorCode::Budget: return "BUDGET";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::InvalidDecomposition: return "INVALID_DECOMPOSITION";
    case ErrorCode::UnsupportedSingularity: return "UNSUPPORTED_SINGULARITY";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::UnknownIdentifier: return "UNKNOWN_IDENTIFIER";
    case ErrorCode::TypeMismatch: return "TYPE_MISMATCH";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

}  // namespace toploc
