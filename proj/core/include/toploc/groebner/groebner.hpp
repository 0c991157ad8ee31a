#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toploc/algebra/poly.hpp"

namespace toploc::gb {

/// Reduction-step limit applied to every Groebner basis computation.
/// Exceeding it raises Error(ErrorCode::Budget); results are never truncated.
std::size_t default_step_budget() noexcept;
void set_default_step_budget(std::size_t steps) noexcept;

/// Reduced Groebner basis of the ideal generated by `generators` in the order
/// of `ring`: monic, interreduced, sorted by increasing leading monomial.
/// Buchberger with normal pair selection and the Gebauer-Moeller criteria.
std::vector<Poly> reduced_groebner_basis(const Ring& ring, std::vector<Poly> generators,
                                         std::size_t budget = default_step_budget());

/// Full normal form of f modulo `basis` (any finite set; a Groebner basis for
/// a canonical answer).
Poly normal_form(const Poly& f, std::span<const Poly> basis);

}  // namespace toploc::gb
