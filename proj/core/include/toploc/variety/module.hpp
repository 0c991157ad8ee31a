#pragma once

#include <optional>
#include <vector>

#include "toploc/variety/minimal_primes.hpp"

namespace toploc {

/// The cyclic module M = R/b, optionally localized at a maximal ideal.
class ModuleSpec {
 public:
  ModuleSpec(IdealHandle b, std::optional<PrimeCert> local_at = std::nullopt);

  const Ring& ring() const noexcept { return b_.ring(); }
  const IdealHandle& ideal() const noexcept { return b_; }
  const std::optional<PrimeCert>& local_at() const noexcept { return local_at_; }
  bool is_local() const noexcept { return local_at_.has_value(); }

 private:
  IdealHandle b_;
  std::optional<PrimeCert> local_at_;
};

/// Top-dimensional minimal primes of b and the dimension d of M. When M is
/// localized only primes inside the maximal ideal count.
struct AsshResult {
  std::vector<PrimeCert> primes;
  int d = -1;
  bool conditional = false;
};
AsshResult assh(const ModuleSpec& module, const HintTable& hints = {});

}  // namespace toploc
