#include "toploc/variety/minimal_primes.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "toploc/error.hpp"
#include "toploc/groebner/groebner.hpp"
#include "toploc/groebner/ideal_ops.hpp"
#include "toploc/variety/irreducible.hpp"
#include "toploc/variety/points.hpp"

namespace toploc {

namespace {

std::vector<std::uint32_t> support_edges(const IdealHandle& ideal) {
  std::vector<std::uint32_t> edges;
  for (const Poly& g : ideal.generators()) edges.push_back(g.leading_monomial().support());
  return edges;
}

std::vector<PrimeCert> coordinate_primes(const Ring& ring, const std::vector<std::uint32_t>& masks) {
  std::vector<PrimeCert> out;
  for (std::uint32_t mask : masks) out.emplace_back(IdealHandle::variables(ring, mask), CertKind::Coordinate);
  sort_primes(out);
  return out;
}

/// Greatest common divisor of two polynomials, via (f) ∩ (g) = (lcm).
Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Poly::constant(f.ring(), Scalar(1));
  IdealHandle meet = gb::intersect(IdealHandle(f.ring(), {f}), IdealHandle(f.ring(), {g}));
  const Poly& l = meet.groebner_basis().front();
  return divide_exact(f * g, l).monic();
}

/// Drops members containing another member.
std::vector<PrimeCert> keep_minimal(std::vector<PrimeCert> primes) {
  std::vector<PrimeCert> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < primes.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gb::contains(primes[i].ideal(), primes[j].ideal())) {
        bool equal = gb::contains(primes[j].ideal(), primes[i].ideal());
        redundant = !equal || j < i;
      }
    }
    if (!redundant) out.push_back(primes[i]);
  }
  sort_primes(out);
  return out;
}

void cross_check_scan(const IdealHandle& J, const std::vector<PrimeCert>& primes, bool zero_dim) {
  if (J.ring()->nvars() > 4) return;
  auto scanned = scan_points(J);
  if (!scanned) return;
  std::set<std::vector<Scalar>> seen(scanned->begin(), scanned->end());
  std::size_t rational = 0;
  for (const PrimeCert& p : primes) {
    if (!p.point()) continue;
    ++rational;
    if (!seen.count(*p.point())) {
      throw Error(ErrorCode::Internal, "isolated point " + p.to_string() + " missing from the exhaustive scan");
    }
  }
  if (zero_dim && rational != seen.size()) {
    throw Error(ErrorCode::Internal, "exhaustive scan disagrees with the rational point count");
  }
}

}  // namespace

std::vector<std::uint32_t> minimal_vertex_covers(const std::vector<std::uint32_t>& edges, std::size_t nvars) {
  for (std::uint32_t e : edges) {
    if (e == 0) throw Error(ErrorCode::Precondition, "monomial ideal contains a unit");
  }
  auto covers = [&](std::uint32_t s) {
    return std::all_of(edges.begin(), edges.end(), [s](std::uint32_t e) { return (e & s) != 0; });
  };
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest && minimal; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      if (covers(s & ~bit)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<PrimeCert> verify_decomposition(const IdealHandle& ideal, const std::vector<IdealHandle>& components) {
  if (components.empty()) throw Error(ErrorCode::InvalidDecomposition, "empty decomposition");
  std::vector<PrimeCert> out;
  for (const IdealHandle& c : components) {
    if (!same_ring(c.ring(), ideal.ring())) throw Error(ErrorCode::RingMismatch, "hint in a different ring");
    if (c.is_unit()) throw Error(ErrorCode::InvalidDecomposition, "hint component is the unit ideal");
    if (!gb::contains(c, ideal)) {
      throw Error(ErrorCode::InvalidDecomposition,
                  "hint component " + c.to_string() + " does not contain " + ideal.to_string());
    }
  }
  if (!gb::radical_contains(ideal, gb::intersect_all(components))) {
    throw Error(ErrorCode::InvalidDecomposition,
                "intersection of the hint components is not inside the radical of " + ideal.to_string());
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (i != j && gb::contains(components[j], components[i])) {
        throw Error(ErrorCode::InvalidDecomposition,
                    "hint component " + components[i].to_string() + " contains " + components[j].to_string());
      }
    }
  }
  for (const IdealHandle& c : components) {
    auto cert = certify_prime(c);
    out.push_back(cert ? *cert : PrimeCert(c, CertKind::Asserted));
  }
  sort_primes(out);
  return out;
}

namespace {

/// A piece of a splitting V(J) = V(J1) ∪ ... ∪ V(Jk).
struct Leaf {
  IdealHandle ideal;
  std::vector<PrimeCert> primes;
  /// False when `primes` may miss minimal primes of the piece.
  bool resolved = true;
};

/// Polynomials h1, h2 outside J with h1 * h2 ∈ J, found from monomial
/// content, rational roots of univariate elements, or common factors of
/// two elements.
std::optional<std::pair<Poly, Poly>> find_split(const IdealHandle& J) {
  std::vector<Poly> pool = J.groebner_basis();
  for (const Poly& g : J.generators()) pool.push_back(g.monic());
  const Ring& ring = J.ring();
  auto proper = [&](const Poly& h1, const Poly& h2) {
    return !h1.is_constant() && !h2.is_constant() && !gb::contains(J, h1) && !gb::contains(J, h2);
  };
  for (const Poly& e : pool) {
    Monomial content = e.terms().front().monomial;
    for (const Term& t : e.terms()) content = gcd(content, t.monomial);
    if (content.is_one() || (e.is_monomial() && content.degree() == 1)) continue;
    std::size_t var = static_cast<std::size_t>(std::countr_zero(content.support()));
    Poly x = Poly::variable(ring, var);
    Poly rest = divide_exact(e, x);
    if (proper(x, rest)) return std::make_pair(x, rest);
  }
  for (const Poly& e : pool) {
    if (!std::has_single_bit(e.variable_mask()) || e.total_degree() < 2) continue;
    std::size_t var = static_cast<std::size_t>(std::countr_zero(e.variable_mask()));
    RootSet roots = univariate_roots(ring->field(), *as_univariate(e, var));
    if (roots.roots.empty()) continue;
    Poly lin = Poly::variable(ring, var) - Poly::constant(ring, roots.roots.front().value);
    Poly rest = divide_exact(e, lin);
    if (proper(lin, rest)) return std::make_pair(lin, rest);
  }
  const std::size_t limit = std::min<std::size_t>(pool.size(), 12);
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = i + 1; j < limit; ++j) {
      if (pool[i].is_monomial() || pool[j].is_monomial()) continue;
      Poly h = poly_gcd(pool[i], pool[j]);
      if (h.is_constant()) continue;
      for (const Poly& e : {pool[i], pool[j]}) {
        if (h.total_degree() == e.total_degree()) continue;
        Poly rest = divide_exact(e, h);
        if (proper(h, rest)) return std::make_pair(h, rest);
      }
    }
  }
  return std::nullopt;
}

void split(const IdealHandle& J, const HintTable& hints, int depth, std::vector<Leaf>& out) {
  if (J.is_unit()) return;
  if (const auto* hinted = hints.find(J)) {
    out.push_back(Leaf{J, verify_decomposition(J, *hinted), true});
    return;
  }
  if (J.is_monomial()) {
    auto covers = minimal_vertex_covers(support_edges(J), J.ring()->nvars());
    out.push_back(Leaf{J, coordinate_primes(J.ring(), covers), true});
    return;
  }
  if (auto cert = certify_prime(J)) {
    out.push_back(Leaf{J, {*cert}, true});
    return;
  }
  if (gb::dimension(J) == 0) {
    PointSet points = rational_points(J);
    Leaf leaf{J, {}, points.complete};
    for (const auto& pt : points.points) leaf.primes.emplace_back(point_ideal(J.ring(), pt), CertKind::RationalPoint);
    out.push_back(std::move(leaf));
    return;
  }
  if (depth < 32) {
    if (auto halves = find_split(J)) {
      split(gb::sum(J, IdealHandle(J.ring(), {halves->first})), hints, depth + 1, out);
      split(gb::sum(J, IdealHandle(J.ring(), {halves->second})), hints, depth + 1, out);
      return;
    }
  }
  out.push_back(Leaf{J, {}, false});
}

std::vector<Leaf> split_all(const IdealHandle& J, const HintTable& hints) {
  std::vector<Leaf> leaves;
  split(IdealHandle(J.ring(), J.groebner_basis()), hints, 0, leaves);
  return leaves;
}

}  // namespace

std::vector<PrimeCert> minimal_primes(const IdealHandle& ideal, const HintTable& hints) {
  if (ideal.is_unit()) throw Error(ErrorCode::Precondition, "minimal primes of the unit ideal");
  if (const auto* hinted = hints.find(ideal)) return verify_decomposition(ideal, *hinted);
  if (ideal.is_monomial()) {
    return coordinate_primes(ideal.ring(), minimal_vertex_covers(support_edges(ideal), ideal.ring()->nvars()));
  }
  if (auto cert = certify_prime(ideal)) return {*cert};
  std::vector<PrimeCert> all;
  for (Leaf& leaf : split_all(ideal, hints)) {
    if (!leaf.resolved) {
      throw Error(ErrorCode::Unsupported, "no decomposition route for " + leaf.ideal.to_string() +
                                              "; supply hint minprimes(...) for " + ideal.to_string());
    }
    all.insert(all.end(), leaf.primes.begin(), leaf.primes.end());
  }
  return keep_minimal(std::move(all));
}

namespace {

/// Product of the leading coefficients in K[U] of a Groebner basis of J for a
/// block order with the variables outside U first. Every prime of J : h^∞
/// keeps U independent, so it has dimension at least |U|.
Poly independent_set_denominator(const IdealHandle& J, std::uint32_t U) {
  const Ring& ring = J.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::string> names;
  std::vector<int> to_block(n), back(n);
  std::size_t k = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      if (((U >> i) & 1u) != static_cast<unsigned>(pass)) continue;
      to_block[i] = static_cast<int>(names.size());
      back[names.size()] = static_cast<int>(i);
      names.push_back(ring->variables()[i]);
    }
    if (pass == 0) k = names.size();
  }
  Ring blocked = make_ring(ring->field(), names, MonomialOrder::eliminating(k));
  std::vector<Poly> gens;
  for (const Poly& g : J.generators()) gens.push_back(g.map_to(blocked, to_block));
  Poly h = Poly::constant(ring, ring->field().one());
  std::vector<Poly> seen;
  for (const Poly& g : gb::reduced_groebner_basis(blocked, std::move(gens))) {
    const Monomial& lead = g.leading_monomial();
    std::vector<Term> coeff;
    for (const Term& t : g.terms()) {
      bool same = true;
      for (std::size_t i = 0; i < k; ++i) same = same && t.monomial[i] == lead[i];
      if (!same) continue;
      Monomial m = t.monomial;
      for (std::size_t i = 0; i < k; ++i) m = m / Monomial::variable(i, m[i]);
      coeff.push_back(Term{m, t.coeff});
    }
    Poly c = Poly::from_terms(blocked, std::move(coeff)).map_to(ring, back).monic();
    if (c.is_constant()) continue;
    if (std::any_of(seen.begin(), seen.end(), [&](const Poly& s) { return s == c; })) continue;
    seen.push_back(c);
    h = h * c;
  }
  return h;
}

IsolatedPoints isolated_points(const IdealHandle& J, const HintTable& hints, int depth);

/// V(J) = V(J : h^∞) ∪ V(J + h) where the first part has no isolated points.
IsolatedPoints isolated_by_localization(const IdealHandle& J, const HintTable& hints, int depth) {
  IsolatedPoints out;
  auto U = gb::max_independent_set(J);
  if (!U || *U == 0 || depth >= 16) {
    out.complete = false;
    return out;
  }
  Poly h = independent_set_denominator(J, *U);
  if (h.is_constant()) return out;
  IsolatedPoints sub = isolated_points(gb::sum(J, IdealHandle(J.ring(), {h})), hints, depth + 1);
  IdealHandle rest = gb::saturate(J, h);
  out.complete = sub.complete;
  for (const PrimeCert& p : sub.primes) {
    if (!gb::contains(p.ideal(), rest)) out.primes.push_back(p);
  }
  return out;
}

IsolatedPoints isolated_points(const IdealHandle& J, const HintTable& hints, int depth) {
  IsolatedPoints out;
  if (J.is_unit()) return out;
  const int dim = gb::dimension(J);
  if (hints.find(J) || J.is_monomial() || certify_prime(J)) {
    for (const PrimeCert& p : minimal_primes(J, hints)) {
      if (p.is_maximal()) out.primes.push_back(p);
    }
  } else {
    std::vector<PrimeCert> all;
    for (Leaf& leaf : split_all(J, hints)) {
      out.complete = out.complete && leaf.resolved;
      all.insert(all.end(), leaf.primes.begin(), leaf.primes.end());
    }
    for (const PrimeCert& p : keep_minimal(std::move(all))) {
      if (!p.is_maximal()) continue;
      // Without a full splitting an unresolved piece may pass through p.
      if (out.complete || is_isolated_point(J, p.ideal())) out.primes.push_back(p);
    }
    if (!out.complete && dim > 0) {
      IsolatedPoints local = isolated_by_localization(J, hints, depth);
      if (local.complete) out = std::move(local);
    }
  }
  sort_primes(out.primes);
  cross_check_scan(J, out.primes, dim == 0 && out.complete);
  return out;
}

}  // namespace

IsolatedPoints isolated_zero_dim_primes(const IdealHandle& J, const HintTable& hints) {
  return isolated_points(J, hints, 0);
}

std::vector<PrimeCert> monomial_ass(const IdealHandle& b) {
  if (!b.is_monomial()) throw Error(ErrorCode::Unsupported, "monomial_ass needs a monomial ideal");
  if (b.is_unit()) return {};
  const Ring& ring = b.ring();
  const std::size_t n = ring->nvars();
  std::vector<Monomial> gens;
  for (const Poly& g : b.generators()) gens.push_back(g.leading_monomial());
  std::vector<std::uint32_t> bound(n, 0);
  for (const Monomial& g : gens) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  }
  std::uint64_t total = 1;
  for (std::uint32_t e : bound) {
    total *= e + 1;
    if (total > 2'000'000) throw Error(ErrorCode::Unsupported, "monomial_ass enumeration too large");
  }
  std::set<std::uint32_t> found;
  std::vector<std::uint32_t> exps(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      exps[i] = static_cast<std::uint32_t>(c % (bound[i] + 1));
      c /= bound[i] + 1;
    }
    Monomial m{std::span<const std::uint32_t>(exps)};
    bool member = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
    if (member) continue;
    // (b : m) is generated by g / gcd(g, m); its radical is prime exactly when
    // every generator meets the set of variables having a pure power in it.
    std::vector<std::uint32_t> supports;
    std::uint32_t pure = 0;
    for (const Monomial& g : gens) {
      std::uint32_t s = (g / gcd(g, m)).support();
      supports.push_back(s);
      if (std::has_single_bit(s)) pure |= s;
    }
    bool prime = std::all_of(supports.begin(), supports.end(), [pure](std::uint32_t s) { return (s & pure) != 0; });
    if (prime) found.insert(pure);
  }
  return coordinate_primes(ring, std::vector<std::uint32_t>(found.begin(), found.end()));
}

}  // namespace toploc
