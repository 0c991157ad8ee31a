#include "toploc/groebner/ideal_ops.hpp"

#include <algorithm>
#include <bit>

#include "toploc/error.hpp"
#include "toploc/groebner/groebner.hpp"

namespace toploc::gb {

namespace {

void require_same(const IdealHandle& a, const IdealHandle& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw Error(ErrorCode::RingMismatch, "ideals belong to different rings");
  }
}

/// Maps of variables into a ring with `shift` extra leading variables and back.
std::vector<int> shift_map(std::size_t n, int shift) {
  std::vector<int> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<int>(i) + shift;
  return map;
}

std::vector<int> unshift_map(std::size_t n_extended, int shift) {
  std::vector<int> map(n_extended);
  for (std::size_t i = 0; i < n_extended; ++i) map[i] = static_cast<int>(i) - shift;
  return map;
}

/// Basis elements free of the first `extra` variables, mapped back to `ring`.
IdealHandle contract(const Ring& ring, const std::vector<Poly>& basis, std::size_t extra) {
  const std::uint32_t extra_mask = (1u << extra) - 1;
  auto back = unshift_map(ring->nvars() + extra, static_cast<int>(extra));
  std::vector<Poly> gens;
  for (const Poly& g : basis) {
    if ((g.variable_mask() & extra_mask) == 0) gens.push_back(g.map_to(ring, back));
  }
  return IdealHandle(ring, std::move(gens));
}

}  // namespace

bool contains(const IdealHandle& ideal, const Poly& f) {
  if (!same_ring(ideal.ring(), f.ring())) {
    throw Error(ErrorCode::RingMismatch, "polynomial and ideal belong to different rings");
  }
  if (f.is_zero()) return true;
  return normal_form(f, ideal.groebner_basis()).is_zero();
}

bool contains(const IdealHandle& big, const IdealHandle& small) {
  require_same(big, small);
  for (const Poly& g : small.generators()) {
    if (!contains(big, g)) return false;
  }
  return true;
}

bool same_ideal(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  return a.groebner_basis() == b.groebner_basis();
}

bool radical_contains(const IdealHandle& ideal, const Poly& f) {
  if (!same_ring(ideal.ring(), f.ring())) {
    throw Error(ErrorCode::RingMismatch, "polynomial and ideal belong to different rings");
  }
  if (f.is_zero() || contains(ideal, f)) return true;
  const Ring& ring = ideal.ring();
  Ring ext = with_leading_variables(ring, {"_t"});
  auto up = shift_map(ring->nvars(), 1);
  std::vector<Poly> gens;
  for (const Poly& g : ideal.generators()) gens.push_back(g.map_to(ext, up));
  Poly t = Poly::variable(ext, 0);
  gens.push_back(Poly::constant(ext, Scalar(1)) - t * f.map_to(ext, up));
  auto basis = reduced_groebner_basis(ext, std::move(gens));
  return basis.size() == 1 && basis.front().is_constant();
}

bool radical_contains(const IdealHandle& small, const IdealHandle& big) {
  require_same(small, big);
  for (const Poly& g : big.generators()) {
    if (!radical_contains(small, g)) return false;
  }
  return true;
}

IdealHandle sum(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  std::vector<Poly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle product(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  std::vector<Poly> gens;
  for (const Poly& f : a.generators()) {
    for (const Poly& g : b.generators()) gens.push_back(f * g);
  }
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return IdealHandle::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const Ring& ring = a.ring();
  Ring ext = with_leading_variables(ring, {"_t"});
  auto up = shift_map(ring->nvars(), 1);
  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = Poly::constant(ext, Scalar(1)) - t;
  std::vector<Poly> gens;
  for (const Poly& f : a.generators()) gens.push_back(t * f.map_to(ext, up));
  for (const Poly& g : b.generators()) gens.push_back(one_minus_t * g.map_to(ext, up));
  return contract(ring, reduced_groebner_basis(ext, std::move(gens)), 1);
}

IdealHandle intersect_all(const std::vector<IdealHandle>& ideals) {
  if (ideals.empty()) throw Error(ErrorCode::Precondition, "intersection of no ideals");
  IdealHandle result = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) result = intersect(result, ideals[i]);
  return result;
}

IdealHandle quotient(const IdealHandle& a, const Poly& f) {
  if (!same_ring(a.ring(), f.ring())) {
    throw Error(ErrorCode::RingMismatch, "polynomial and ideal belong to different rings");
  }
  if (contains(a, f)) return IdealHandle::unit(a.ring());
  IdealHandle meet = intersect(a, IdealHandle(a.ring(), {f}));
  std::vector<Poly> gens;
  for (const Poly& g : meet.groebner_basis()) gens.push_back(divide_exact(g, f));
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle quotient(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  if (b.is_zero()) return IdealHandle::unit(a.ring());
  std::vector<IdealHandle> parts;
  for (const Poly& g : b.generators()) parts.push_back(quotient(a, g));
  return intersect_all(parts);
}

IdealHandle saturate(const IdealHandle& a, const IdealHandle& b) {
  require_same(a, b);
  IdealHandle current = a;
  while (true) {
    IdealHandle next = quotient(current, b);
    if (same_ideal(next, current)) return current;
    current = IdealHandle(a.ring(), next.groebner_basis());
  }
}

IdealHandle saturate(const IdealHandle& a, const Poly& f) {
  if (!same_ring(a.ring(), f.ring())) {
    throw Error(ErrorCode::RingMismatch, "polynomial and ideal belong to different rings");
  }
  if (f.is_zero()) return IdealHandle::unit(a.ring());
  const Ring& ring = a.ring();
  Ring ext = with_leading_variables(ring, {"_t"});
  auto up = shift_map(ring->nvars(), 1);
  std::vector<Poly> gens;
  for (const Poly& g : a.generators()) gens.push_back(g.map_to(ext, up));
  gens.push_back(Poly::constant(ext, Scalar(1)) - Poly::variable(ext, 0) * f.map_to(ext, up));
  return contract(ring, reduced_groebner_basis(ext, std::move(gens)), 1);
}

IdealHandle eliminate(const IdealHandle& a, std::uint32_t variable_mask) {
  const Ring& ring = a.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::string> names;
  std::vector<int> to_block(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (variable_mask & (1u << i)) {
      to_block[i] = static_cast<int>(k++);
      names.push_back(ring->variables()[i]);
    }
  }
  if (k == 0) return a;
  std::size_t rest = k;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(variable_mask & (1u << i))) {
      to_block[i] = static_cast<int>(rest++);
      names.push_back(ring->variables()[i]);
    }
  }
  Ring blocked = make_ring(ring->field(), names, MonomialOrder::eliminating(k));
  std::vector<int> back(n);
  for (std::size_t i = 0; i < n; ++i) back[static_cast<std::size_t>(to_block[i])] = static_cast<int>(i);
  std::vector<Poly> gens;
  for (const Poly& g : a.generators()) gens.push_back(g.map_to(blocked, to_block));
  std::vector<Poly> kept;
  const std::uint32_t low = (1u << k) - 1;
  for (const Poly& g : reduced_groebner_basis(blocked, std::move(gens))) {
    if ((g.variable_mask() & low) == 0) kept.push_back(g.map_to(ring, back));
  }
  return IdealHandle(ring, std::move(kept));
}

std::optional<std::uint32_t> max_independent_set(const IdealHandle& ideal) {
  const auto& basis = ideal.groebner_basis();
  if (basis.size() == 1 && basis.front().is_constant()) return std::nullopt;
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const Poly& g : basis) supports.push_back(g.leading_monomial().support());
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) <= std::popcount(best)) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t sup) { return (sup & ~s) == 0; });
    if (independent) best = s;
  }
  return best;
}

int dimension(const IdealHandle& ideal) {
  auto u = max_independent_set(ideal);
  return u ? std::popcount(*u) : -1;
}

IdealHandle with_order(const IdealHandle& ideal, MonomialOrder order) {
  Ring target = toploc::with_order(ideal.ring(), order);
  std::vector<int> identity = shift_map(ideal.ring()->nvars(), 0);
  std::vector<Poly> gens;
  for (const Poly& g : ideal.generators()) gens.push_back(g.map_to(target, identity));
  return IdealHandle(target, std::move(gens));
}

}  // namespace toploc::gb
