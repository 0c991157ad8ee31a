#pragma once

#include <optional>

#include "toploc/algebra/poly.hpp"

namespace toploc {

/// Square root of f in its polynomial ring, if f is a perfect square.
std::optional<Poly> poly_sqrt(const Poly& f);

/// True when f is certified irreducible: total degree 1; a univariate of
/// degree 2 or 3 without roots in the field; or degree 1 or 2 in some variable
/// with constant leading coefficient (degree 2 needs a non-square
/// discriminant, odd characteristic). False means "not certified".
bool certify_irreducible(const Poly& f);

}  // namespace toploc
