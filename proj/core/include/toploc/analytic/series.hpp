#pragma once

#include <cstddef>

#include "toploc/variety/points.hpp"

namespace toploc {

/// Truncated univariate power series share the Univariate representation:
/// coefficient k multiplies t^k, and everything from t^precision on is dropped.

Univariate series_add(const Field& field, const Univariate& a, const Univariate& b, std::size_t precision);
Univariate series_mul(const Field& field, const Univariate& a, const Univariate& b, std::size_t precision);

/// F(t, w(t)) mod t^precision for a polynomial F in a two-variable ring.
Univariate evaluate_along(const Poly& F, const Univariate& w, std::size_t precision);

/// (1 + t)^(1/2) mod t^precision (char 0 or large enough p).
Univariate sqrt_one_plus(const Field& field, std::size_t precision);

}  // namespace toploc
