#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toploc/groebner/ideal.hpp"

namespace toploc {

/// How primality of a PrimeCert is known.
enum class CertKind {
  Coordinate,         // generated by a subset of the variables
  RationalPoint,      // (x1 - a1, ..., xn - an)
  Linear,             // generated by affine-linear forms
  Graph,              // x_i - g_i with R/p a polynomial ring in the other variables
  PrincipalVerified,  // one generator, irreducibility checked
  Asserted,           // user supplied, unverified
};

std::string_view cert_kind_name(CertKind kind) noexcept;

class PrimeCert {
 public:
  PrimeCert(IdealHandle ideal, CertKind kind);

  const IdealHandle& ideal() const noexcept { return ideal_; }
  const Ring& ring() const noexcept { return ideal_.ring(); }
  CertKind kind() const noexcept { return kind_; }
  /// Krull dimension of R/p.
  int dim() const noexcept { return dim_; }
  int height() const noexcept { return static_cast<int>(ideal_.ring()->nvars()) - dim_; }
  bool is_maximal() const noexcept { return dim_ == 0; }
  bool conditional() const noexcept { return kind_ == CertKind::Asserted; }
  /// Coordinates when the ideal is the maximal ideal of a rational point.
  const std::optional<std::vector<Scalar>>& point() const noexcept { return point_; }

  const std::vector<std::string>& key() const { return ideal_.canonical_generators(); }
  std::string to_string() const { return ideal_.to_string(); }

 private:
  IdealHandle ideal_;
  CertKind kind_;
  int dim_;
  std::optional<std::vector<Scalar>> point_;
};

/// Orders certificates by dimension, then by canonical generators.
bool prime_less(const PrimeCert& a, const PrimeCert& b);
void sort_primes(std::vector<PrimeCert>& primes);
bool same_prime(const PrimeCert& a, const PrimeCert& b);

/// A self-verifying certificate when the ideal is recognizably prime
/// (zero, coordinate, linear, rational point, or a principal generator whose
/// irreducibility can be established); nullopt otherwise. Never asserts.
std::optional<PrimeCert> certify_prime(const IdealHandle& ideal);

/// User-supplied minimal-prime decompositions, looked up by ideal equality.
class HintTable {
 public:
  void add(IdealHandle ideal, std::vector<IdealHandle> components);
  /// Components recorded for an ideal equal to `ideal`, if any.
  const std::vector<IdealHandle>* find(const IdealHandle& ideal) const;
  bool empty() const noexcept { return entries_.empty(); }

  struct Entry {
    IdealHandle ideal;
    std::vector<IdealHandle> components;
  };
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace toploc
