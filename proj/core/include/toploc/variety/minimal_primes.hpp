#pragma once

#include <vector>

#include "toploc/variety/prime.hpp"

namespace toploc {

/// Minimal primes of I, sorted. Routes in order: a verified hint; monomial
/// ideals (minimal vertex covers); I itself certified prime; zero-dimensional
/// ideals whose points are all rational; splitting off a certified
/// irreducible common factor of the generators. Throws Unsupported when no
/// route applies and InvalidDecomposition when a hint fails verification.
std::vector<PrimeCert> minimal_primes(const IdealHandle& ideal, const HintTable& hints = {});

/// Checks that `components` is the set of minimal primes of I: each contains
/// I, their intersection lies in √I, no containments among them. Returns the
/// certificates (Asserted where primality is not self-verifying).
std::vector<PrimeCert> verify_decomposition(const IdealHandle& ideal,
                                            const std::vector<IdealHandle>& components);

/// The zero-dimensional minimal primes of J (isolated points of V(J)).
struct IsolatedPoints {
  std::vector<PrimeCert> primes;
  /// False when some isolated points may be missing.
  bool complete = true;
};
IsolatedPoints isolated_zero_dim_primes(const IdealHandle& J, const HintTable& hints = {});

/// Associated primes of S/b for a monomial ideal b.
std::vector<PrimeCert> monomial_ass(const IdealHandle& b);

/// Minimal primes of a monomial ideal as variable masks.
std::vector<std::uint32_t> minimal_vertex_covers(const std::vector<std::uint32_t>& edges,
                                                 std::size_t nvars);

}  // namespace toploc
