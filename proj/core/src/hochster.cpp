#include "toploc/sr/hochster.hpp"

#include <bit>

#include "toploc/error.hpp"

namespace toploc {

BettiTable betti_table(const IdealHandle& I, const Field& field) {
  SimplicialComplex delta = stanley_reisner(I);
  const std::size_t n = delta.nvertices();
  BettiTable table;
  table.totals.assign(n + 1, 0);
  for (std::uint32_t W = 0; W < (1u << n); ++W) {
    SimplicialComplex sub = delta.induced(W);
    const int size = std::popcount(W);
    for (int i = 0; i <= size; ++i) {
      std::size_t rank = reduced_homology_rank(sub, size - i - 1, field);
      if (rank == 0) continue;
      table.entries[{i, W}] = rank;
      table.totals[static_cast<std::size_t>(i)] += rank;
      table.pd = std::max(table.pd, i);
    }
  }
  while (table.totals.size() > 1 && table.totals.back() == 0) table.totals.pop_back();
  table.depth = static_cast<int>(n) - table.pd;
  return table;
}

IdealHandle squarefree_radical(const IdealHandle& I) {
  if (!I.is_monomial()) throw Error(ErrorCode::Precondition, "squarefree radical needs a monomial ideal");
  std::vector<Poly> gens;
  for (const Poly& g : I.generators()) {
    Monomial m;
    const Monomial& lead = g.leading_monomial();
    for (std::size_t v = 0; v < I.ring()->nvars(); ++v) {
      if (lead[v] > 0) m.set(v, 1);
    }
    gens.push_back(Poly::term(I.ring(), m, Scalar(1)));
  }
  return IdealHandle(I.ring(), std::move(gens));
}

int cd_monomial(const IdealHandle& I, const Field& field) {
  if (!I.is_monomial()) throw Error(ErrorCode::Precondition, "cd_monomial needs a monomial ideal");
  if (I.is_unit()) throw Error(ErrorCode::Precondition, "cd_monomial of the unit ideal");
  return betti_table(squarefree_radical(I), field).pd;
}

}  // namespace toploc
