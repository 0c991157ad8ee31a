#pragma once

#include <memory>
#include <string>
#include <vector>

#include "toploc/algebra/poly.hpp"

namespace toploc {

/// Ideal of a polynomial ring with a lazily cached reduced Groebner basis.
/// Copies share the cache; the cache is filled once under a lock and is
/// read-only afterwards.
class IdealHandle {
 public:
  IdealHandle(Ring ring, std::vector<Poly> generators);

  static IdealHandle zero(const Ring& ring) { return IdealHandle(ring, {}); }
  static IdealHandle unit(const Ring& ring);
  /// The ideal generated by the given variables.
  static IdealHandle variables(const Ring& ring, std::uint32_t mask);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }

  const std::vector<Poly>& groebner_basis() const;

  bool is_monomial() const noexcept { return monomial_; }
  bool is_homogeneous() const noexcept { return homogeneous_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const;

  /// Sorted generator strings of the reduced basis; equal ideals give equal keys.
  const std::vector<std::string>& canonical_generators() const;
  /// "(g1, g2, ...)" from the canonical generators; "(0)" for the zero ideal.
  std::string to_string() const;

 private:
  struct Cache;

  Ring ring_;
  std::vector<Poly> generators_;
  bool monomial_ = true;
  bool homogeneous_ = true;
  std::shared_ptr<Cache> cache_;
};

}  // namespace toploc
