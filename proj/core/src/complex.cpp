#include "toploc/sr/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "toploc/error.hpp"

namespace toploc {

namespace {

std::vector<std::uint32_t> antichain(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [s](std::uint32_t t) { return t != s && (s & t) == s; });
    if (!dominated) out.push_back(s);
  }
  return out;
}

/// Rank of a matrix over a prime field, entries in [0, p).
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::uint64_t scale = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * scale % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint64_t f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = (rows[r][k] + p - f * rows[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rank of the boundary map from k-faces to (k-1)-faces.
std::size_t boundary_rank(const SimplicialComplex& complex, int k, const Field& field) {
  if (k < 0) return 0;
  auto top = complex.faces(k);
  auto bottom = complex.faces(k - 1);
  if (top.empty() || bottom.empty()) return 0;
  std::vector<std::vector<int>> signs(bottom.size(), std::vector<int>(top.size(), 0));
  for (std::size_t j = 0; j < top.size(); ++j) {
    int position = 0;
    for (std::uint32_t rest = top[j]; rest; rest &= rest - 1, ++position) {
      std::uint32_t bit = rest & (~rest + 1);
      auto it = std::lower_bound(bottom.begin(), bottom.end(), top[j] & ~bit);
      signs[static_cast<std::size_t>(it - bottom.begin())][j] = position % 2 ? -1 : 1;
    }
  }
  if (field.is_prime_field()) {
    const std::uint64_t p = field.characteristic();
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& row : signs) {
      std::vector<std::uint64_t> r;
      for (int s : row) r.push_back(s < 0 ? p - 1 : static_cast<std::uint64_t>(s));
      rows.push_back(std::move(r));
    }
    return rank_mod_p(std::move(rows), p);
  }
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& row : signs) {
    std::vector<mpq_class> r;
    for (int s : row) r.emplace_back(s);
    rows.push_back(std::move(r));
  }
  return rank_rational(std::move(rows));
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<std::uint32_t> facets)
    : vertices_(std::move(vertices)), facets_(antichain(std::move(facets))) {
  if (vertices_.size() > 16) throw Error(ErrorCode::Precondition, "at most 16 vertices");
  const std::uint32_t all = vertices_.size() == 32 ? ~0u : (1u << vertices_.size()) - 1;
  for (std::uint32_t f : facets_) {
    if (f & ~all) throw Error(ErrorCode::Precondition, "facet uses an unknown vertex");
  }
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<std::uint32_t> facets, bool)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {}

bool SimplicialComplex::contains(std::uint32_t face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [face](std::uint32_t f) { return (face & f) == face; });
}

std::vector<std::uint32_t> SimplicialComplex::all_faces() const {
  std::set<std::uint32_t> out;
  for (std::uint32_t f : facets_) {
    for (std::uint32_t s = f;; s = (s - 1) & f) {
      out.insert(s);
      if (s == 0) break;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::uint32_t> SimplicialComplex::faces(int k) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : all_faces()) {
    if (std::popcount(f) == k + 1) out.push_back(f);
  }
  return out;
}

SimplicialComplex SimplicialComplex::induced(std::uint32_t W) const {
  if (is_void()) return *this;
  std::vector<std::uint32_t> restricted;
  for (std::uint32_t f : facets_) restricted.push_back(f & W);
  return SimplicialComplex(vertices_, std::move(restricted));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (std::uint32_t f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

std::string SimplicialComplex::to_string() const {
  if (is_void()) return "void";
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    bool first = true;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (!(facets_[i] & (1u << v))) continue;
      if (!first) out += ",";
      out += vertices_[v];
      first = false;
    }
    out += "}";
  }
  return out + ">";
}

SimplicialComplex stanley_reisner(const IdealHandle& I) {
  if (!I.is_monomial()) throw Error(ErrorCode::Precondition, "Stanley-Reisner complex needs a monomial ideal");
  std::vector<std::uint32_t> non_faces;
  for (const Poly& g : I.generators()) {
    const Monomial& m = g.leading_monomial();
    if (m.degree() != static_cast<std::uint32_t>(std::popcount(m.support()))) {
      throw Error(ErrorCode::Precondition, "ideal is not squarefree; take the radical first");
    }
    non_faces.push_back(m.support());
  }
  const std::size_t n = I.ring()->nvars();
  if (std::find(non_faces.begin(), non_faces.end(), 0u) != non_faces.end()) {
    throw Error(ErrorCode::Precondition, "the unit ideal has no Stanley-Reisner complex");
  }
  auto is_face = [&](std::uint32_t s) {
    return std::none_of(non_faces.begin(), non_faces.end(), [s](std::uint32_t e) { return (e & s) == e; });
  };
  std::vector<std::uint32_t> facets;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!is_face(s)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (!(s & (1u << v)) && is_face(s | (1u << v))) maximal = false;
    }
    if (maximal) facets.push_back(s);
  }
  return SimplicialComplex(I.ring()->variables(), std::move(facets));
}

IdealHandle stanley_reisner_ideal(const Ring& ring, const SimplicialComplex& complex) {
  const std::size_t n = ring->nvars();
  if (complex.nvertices() != n) throw Error(ErrorCode::Arity, "complex and ring have different vertex counts");
  if (complex.is_void()) return IdealHandle::unit(ring);
  std::vector<Poly> gens;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (complex.contains(s)) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest && minimal; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      if (!complex.contains(s & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    Monomial m;
    for (std::size_t v = 0; v < n; ++v) {
      if (s & (1u << v)) m.set(v, 1);
    }
    gens.push_back(Poly::term(ring, m, Scalar(1)));
  }
  return IdealHandle(ring, std::move(gens));
}

std::size_t reduced_homology_rank(const SimplicialComplex& complex, int i, const Field& field) {
  if (complex.is_void() || i < -1) return 0;
  const std::size_t cells = complex.faces(i).size();
  const std::size_t out = boundary_rank(complex, i, field);
  const std::size_t in = boundary_rank(complex, i + 1, field);
  return cells - out - in;
}

long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long chi = 0;
  for (std::uint32_t f : complex.all_faces()) chi += (std::popcount(f) % 2 == 1) ? -1 : 1;
  return -chi;
}

}  // namespace toploc
