#include "toploc/variety/prime.hpp"

#include <algorithm>

#include "toploc/error.hpp"
#include "toploc/groebner/ideal_ops.hpp"
#include "toploc/variety/irreducible.hpp"
#include "toploc/variety/points.hpp"

namespace toploc {

std::string_view cert_kind_name(CertKind kind) noexcept {
  switch (kind) {
    case CertKind::Coordinate: return "coordinate";
    case CertKind::RationalPoint: return "rational-point";
    case CertKind::Linear: return "linear";
    case CertKind::Graph: return "graph";
    case CertKind::PrincipalVerified: return "principal-verified";
    case CertKind::Asserted: return "asserted";
  }
  return "asserted";
}

PrimeCert::PrimeCert(IdealHandle ideal, CertKind kind)
    : ideal_(std::move(ideal)), kind_(kind), dim_(gb::dimension(ideal_)) {
  if (dim_ < 0) throw Error(ErrorCode::Precondition, "the unit ideal is not prime");
  if (dim_ == 0) point_ = as_rational_point(ideal_);
}

bool prime_less(const PrimeCert& a, const PrimeCert& b) {
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  return a.key() < b.key();
}

void sort_primes(std::vector<PrimeCert>& primes) {
  std::sort(primes.begin(), primes.end(), prime_less);
}

bool same_prime(const PrimeCert& a, const PrimeCert& b) {
  return same_ring(a.ring(), b.ring()) && a.key() == b.key();
}

namespace {

/// True when repeatedly solving a generator c*x + h (x not in h) for x and
/// substituting empties the list; then R/I is a polynomial ring.
bool is_graph(std::vector<Poly> gens) {
  while (!gens.empty()) {
    bool progressed = false;
    for (std::size_t k = 0; k < gens.size() && !progressed; ++k) {
      const Poly& g = gens[k];
      const Ring& ring = g.ring();
      for (std::size_t v = 0; v < ring->nvars() && !progressed; ++v) {
        if (g.degree_in(v) != 1) continue;
        const Monomial x = Monomial::variable(v);
        auto hits = std::count_if(g.terms().begin(), g.terms().end(),
                                  [&](const Term& t) { return t.monomial[v] > 0; });
        auto it = std::find_if(g.terms().begin(), g.terms().end(), [&](const Term& t) { return t.monomial == x; });
        if (hits != 1 || it == g.terms().end()) continue;
        Poly cx = Poly::term(ring, x, it->coeff);
        Scalar inv = ring->field().inv(it->coeff);
        std::vector<Poly> images;
        for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(Poly::variable(ring, i));
        images[v] = -(g - cx).scaled(inv);
        std::vector<Poly> rest;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (i == k) continue;
          Poly r = gens[i].substitute(images);
          if (r.is_zero()) continue;
          if (r.is_constant()) return false;
          rest.push_back(std::move(r));
        }
        gens = std::move(rest);
        progressed = true;
      }
    }
    if (!progressed) return false;
  }
  return true;
}

}  // namespace

std::optional<PrimeCert> certify_prime(const IdealHandle& ideal) {
  const auto& basis = ideal.groebner_basis();
  if (basis.empty()) return PrimeCert(ideal, CertKind::Coordinate);
  if (basis.size() == 1 && basis.front().is_constant()) return std::nullopt;
  bool linear = std::all_of(basis.begin(), basis.end(), [](const Poly& g) { return g.total_degree() == 1; });
  if (linear) {
    bool coordinate = std::all_of(basis.begin(), basis.end(), [](const Poly& g) { return g.is_monomial(); });
    if (coordinate) return PrimeCert(ideal, CertKind::Coordinate);
    if (as_rational_point(ideal)) return PrimeCert(ideal, CertKind::RationalPoint);
    return PrimeCert(ideal, CertKind::Linear);
  }
  if (is_graph(basis)) return PrimeCert(ideal, CertKind::Graph);
  if (basis.size() == 1 && certify_irreducible(basis.front())) {
    return PrimeCert(ideal, CertKind::PrincipalVerified);
  }
  return std::nullopt;
}

void HintTable::add(IdealHandle ideal, std::vector<IdealHandle> components) {
  entries_.push_back(Entry{std::move(ideal), std::move(components)});
}

const std::vector<IdealHandle>* HintTable::find(const IdealHandle& ideal) const {
  for (const Entry& e : entries_) {
    if (same_ring(e.ideal.ring(), ideal.ring()) && gb::same_ideal(e.ideal, ideal)) return &e.components;
  }
  return nullptr;
}

}  // namespace toploc
