#include "toploc/variety/module.hpp"

#include "toploc/error.hpp"
#include "toploc/groebner/ideal_ops.hpp"

namespace toploc {

ModuleSpec::ModuleSpec(IdealHandle b, std::optional<PrimeCert> local_at)
    : b_(std::move(b)), local_at_(std::move(local_at)) {
  if (b_.is_unit()) throw Error(ErrorCode::Precondition, "module R/(1) is zero");
  if (local_at_) {
    if (!local_at_->is_maximal()) throw Error(ErrorCode::Precondition, "localization needs a maximal ideal");
    if (!same_ring(local_at_->ring(), b_.ring())) throw Error(ErrorCode::RingMismatch, "localization in another ring");
    if (!gb::contains(local_at_->ideal(), b_)) {
      throw Error(ErrorCode::Precondition, "module vanishes at " + local_at_->to_string());
    }
  }
}

AsshResult assh(const ModuleSpec& module, const HintTable& hints) {
  AsshResult out;
  for (const PrimeCert& p : minimal_primes(module.ideal(), hints)) {
    if (module.is_local() && !gb::contains(module.local_at()->ideal(), p.ideal())) continue;
    if (p.dim() > out.d) {
      out.d = p.dim();
      out.primes.clear();
    }
    if (p.dim() == out.d) out.primes.push_back(p);
  }
  for (const PrimeCert& p : out.primes) out.conditional = out.conditional || p.conditional();
  sort_primes(out.primes);
  return out;
}

}  // namespace toploc
