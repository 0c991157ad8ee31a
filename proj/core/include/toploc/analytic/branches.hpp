#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toploc/groebner/ideal.hpp"
#include "toploc/variety/points.hpp"

namespace toploc {

/// One analytic branch of a plane curve (or of a cylinder over one) at a
/// rational point: solved - c_solved = sum_k series[k] * (parameter - c_parameter)^k.
struct BranchDatum {
  Poly curve;
  std::vector<Scalar> center;
  std::size_t solved = 0;
  /// Absent when the curve is a union of hyperplanes in one variable.
  std::optional<std::size_t> parameter;
  /// Linear form of the tangent line in shifted coordinates; doubles as the branch id.
  std::string tangent;
  Univariate series;
  unsigned truncation = 0;
  bool stable = false;

  const std::string& id() const noexcept { return tangent; }
  /// e.g. "y = x + 1/2*x^2 - 1/8*x^3 + O(x^8)" in shifted coordinates.
  std::string to_string() const;
};

/// Branches of f at `center`, one per tangent line, lifted to order N and
/// recomputed at 2N for the stability flag. Throws UnsupportedSingularity when
/// the tangent cone has repeated or non-rational factors, and Unsupported
/// when f involves more than two variables.
std::vector<BranchDatum> plane_branches(const Poly& f, const std::vector<Scalar>& center, unsigned N);

enum class Dim0Verdict { Yes, No, Unstable };
std::string_view dim0_verdict_name(Dim0Verdict v) noexcept;

struct Dim0Detail {
  Dim0Verdict verdict = Dim0Verdict::Unstable;
  unsigned truncation = 0;
  /// Hilbert-Samuel values HS(k) = length of B/(I + n^k), k = 0..2N, in the
  /// branch ring B with maximal ideal n.
  std::vector<std::size_t> hilbert_samuel;
};

/// Whether J cuts the branch down to its center. YES when HS(k) = HS(k+1)
/// for some k < N, which by Nakayama puts a power of n inside I; NO when the
/// increments stay positive and non-decreasing over the upper half of both
/// [0, N) and [0, 2N); UNSTABLE otherwise.
Dim0Detail branch_dim0_test(const BranchDatum& branch, const IdealHandle& J, unsigned N);

}  // namespace toploc
