#pragma once

#include <cstddef>
#include <string_view>

#include "toploc/algebra/poly.hpp"
#include "toploc/error.hpp"

namespace toploc {

/// Syntax error in polynomial text; `offset` indexes the offending character
/// (text.size() for an unexpected end).
class PolyParseError : public Error {
 public:
  PolyParseError(const std::string& message, std::size_t offset, ErrorCode code = ErrorCode::Syntax)
      : Error(code, message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses `3/2*x^2*y - z + 1` style text over the variables of `ring`.
/// Division is allowed by nonzero constants only.
Poly parse_poly(const Ring& ring, std::string_view text);

}  // namespace toploc
