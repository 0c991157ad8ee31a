#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toploc/groebner/ideal.hpp"

namespace toploc {

/// Dense univariate polynomial, coefficients from degree 0 upwards.
using Univariate = std::vector<Scalar>;

/// Coefficients of f when only variable `var` occurs in it.
std::optional<Univariate> as_univariate(const Poly& f, std::size_t var);

struct Root {
  Scalar value;
  unsigned multiplicity;
};

struct RootSet {
  std::vector<Root> roots;  // increasing
  /// Multiplicities sum to the degree: every root over the algebraic closure is here.
  bool splits;
};

/// Roots in the coefficient field. Over QQ candidates come from the rational
/// root theorem; throws Unsupported when the coefficients are too large to
/// enumerate divisors.
RootSet univariate_roots(const Field& field, Univariate f);

struct PointSet {
  std::vector<std::vector<Scalar>> points;  // sorted
  /// Every point over the algebraic closure is rational.
  bool complete;
};

/// Rational points of V(I) for zero-dimensional I, by a triangular descent
/// through lex Groebner bases.
PointSet rational_points(const IdealHandle& ideal);

IdealHandle point_ideal(const Ring& ring, const std::vector<Scalar>& point);
/// Point coordinates when the ideal is (x1 - a1, ..., xn - an).
std::optional<std::vector<Scalar>> as_rational_point(const IdealHandle& ideal);

/// m is a minimal prime of J, i.e. an isolated point of V(J): J ⊆ m and
/// (J : f^∞) ⊄ m for every generator f of m.
bool is_isolated_point(const IdealHandle& J, const IdealHandle& m);

/// Exhaustive scan of the F_p-points of V(I); nullopt when p^n exceeds `limit`.
std::optional<std::vector<std::vector<Scalar>>> scan_points(const IdealHandle& ideal,
                                                            std::uint64_t limit = 100000);

}  // namespace toploc
