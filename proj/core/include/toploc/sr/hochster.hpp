#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "toploc/sr/complex.hpp"

namespace toploc {

/// Multigraded Betti numbers of S/I for squarefree monomial I: entry (i, W)
/// holds beta_{i,W} = dim reduced H_{|W|-i-1}(Delta_W).
struct BettiTable {
  std::map<std::pair<int, std::uint32_t>, std::size_t> entries;
  std::vector<std::size_t> totals;  // totals[i] = beta_i
  int pd = 0;
  int depth = 0;
};

BettiTable betti_table(const IdealHandle& I, const Field& field = Field::prime(2));

/// (x_i...) reduction of each monomial generator to its support.
IdealHandle squarefree_radical(const IdealHandle& I);

/// cd(I, S) = pd(S / √I) for a monomial ideal I ≠ (1).
int cd_monomial(const IdealHandle& I, const Field& field = Field::prime(2));

}  // namespace toploc
