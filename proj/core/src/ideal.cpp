#include "toploc/groebner/ideal.hpp"

#include <algorithm>
#include <mutex>

#include "toploc/error.hpp"
#include "toploc/groebner/groebner.hpp"

namespace toploc {

struct IdealHandle::Cache {
  std::mutex mutex;
  bool has_basis = false;
  std::vector<Poly> basis;
  bool has_key = false;
  std::vector<std::string> key;
};

IdealHandle::IdealHandle(Ring ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (Poly& g : generators) {
    if (!same_ring(g.ring(), ring_)) {
      throw Error(ErrorCode::RingMismatch, "ideal generator belongs to a different ring");
    }
    if (g.is_zero()) continue;
    monomial_ = monomial_ && g.is_monomial();
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    generators_.push_back(std::move(g));
  }
}

IdealHandle IdealHandle::unit(const Ring& ring) {
  return IdealHandle(ring, {Poly::constant(ring, Scalar(1))});
}

IdealHandle IdealHandle::variables(const Ring& ring, std::uint32_t mask) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (mask & (1u << i)) gens.push_back(Poly::variable(ring, i));
  }
  return IdealHandle(ring, std::move(gens));
}

const std::vector<Poly>& IdealHandle::groebner_basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->has_basis) {
    cache_->basis = gb::reduced_groebner_basis(ring_, generators_);
    cache_->has_basis = true;
  }
  return cache_->basis;
}

bool IdealHandle::is_unit() const {
  const auto& basis = groebner_basis();
  return basis.size() == 1 && basis.front().is_constant();
}

const std::vector<std::string>& IdealHandle::canonical_generators() const {
  const auto& basis = groebner_basis();
  std::lock_guard lock(cache_->mutex);
  if (!cache_->has_key) {
    std::vector<std::string> key;
    for (const Poly& g : basis) key.push_back(g.to_string());
    std::sort(key.begin(), key.end());
    cache_->key = std::move(key);
    cache_->has_key = true;
  }
  return cache_->key;
}

std::string IdealHandle::to_string() const {
  const auto& key = canonical_generators();
  if (key.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ", ";
    out += key[i];
  }
  return out + ")";
}

}  // namespace toploc
