#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toploc/groebner/ideal.hpp"

namespace toploc::gb {

bool contains(const IdealHandle& ideal, const Poly& f);
/// small ⊆ big.
bool contains(const IdealHandle& big, const IdealHandle& small);
bool same_ideal(const IdealHandle& a, const IdealHandle& b);

/// f ∈ √I, decided by 1 ∈ I + (1 - t f) in a ring with one extra variable.
bool radical_contains(const IdealHandle& ideal, const Poly& f);
/// √small ⊇ big, i.e. every generator of big lies in √small.
bool radical_contains(const IdealHandle& small, const IdealHandle& big);

IdealHandle sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle product(const IdealHandle& a, const IdealHandle& b);
/// a ∩ b by eliminating t from t·a + (1 - t)·b.
IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);
IdealHandle intersect_all(const std::vector<IdealHandle>& ideals);
/// a : (f) = (a ∩ (f)) / f.
IdealHandle quotient(const IdealHandle& a, const Poly& f);
/// a : b as the intersection of the quotients by the generators of b.
IdealHandle quotient(const IdealHandle& a, const IdealHandle& b);
/// a : b^∞ by iterating quotients until the ideal stops growing.
IdealHandle saturate(const IdealHandle& a, const IdealHandle& b);
/// a : f^∞ in one elimination, (a + (1 - t f)) ∩ K[x].
IdealHandle saturate(const IdealHandle& a, const Poly& f);
/// a ∩ K[variables outside mask], returned as an ideal of the same ring.
IdealHandle eliminate(const IdealHandle& a, std::uint32_t variable_mask);

/// Krull dimension of R/I (-1 for the unit ideal), from the largest subset of
/// variables independent modulo the leading-term ideal.
int dimension(const IdealHandle& ideal);
/// A largest such subset as a variable mask; nullopt for the unit ideal.
std::optional<std::uint32_t> max_independent_set(const IdealHandle& ideal);

/// Same ideal in a ring with the same variables but another order.
IdealHandle with_order(const IdealHandle& ideal, MonomialOrder order);

}  // namespace toploc::gb
