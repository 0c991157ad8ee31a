#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toploc/groebner/ideal.hpp"

namespace toploc {

/// Simplicial complex on named vertices; faces are vertex bitmasks. The void
/// complex (no faces at all) is distinct from {∅}.
class SimplicialComplex {
 public:
  /// Facets are reduced to an antichain.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<std::uint32_t> facets);

  static SimplicialComplex void_complex(std::vector<std::string> vertices) {
    return SimplicialComplex(std::move(vertices), {}, true);
  }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::size_t nvertices() const noexcept { return vertices_.size(); }
  const std::vector<std::uint32_t>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }

  bool contains(std::uint32_t face) const noexcept;
  /// Faces with k + 1 vertices, increasing; k = -1 gives {∅}.
  std::vector<std::uint32_t> faces(int k) const;
  std::vector<std::uint32_t> all_faces() const;
  /// Restriction to the vertex subset W (same vertex list).
  SimplicialComplex induced(std::uint32_t W) const;
  int dimension() const;

  std::string to_string() const;

 private:
  SimplicialComplex(std::vector<std::string> vertices, std::vector<std::uint32_t> facets, bool);

  std::vector<std::string> vertices_;
  std::vector<std::uint32_t> facets_;
};

/// Complex of the squarefree monomial ideal I: faces are supports of
/// squarefree monomials outside I. Throws Precondition on non-squarefree or
/// non-monomial input.
SimplicialComplex stanley_reisner(const IdealHandle& I);
/// Ideal generated by the minimal non-faces.
IdealHandle stanley_reisner_ideal(const Ring& ring, const SimplicialComplex& complex);

/// Dimension of the i-th reduced homology over `field`, by ranks of boundary
/// matrices.
std::size_t reduced_homology_rank(const SimplicialComplex& complex, int i, const Field& field);

/// Alternating face count sum (-1)^k f_k from k = -1.
long reduced_euler_characteristic(const SimplicialComplex& complex);

}  // namespace toploc
