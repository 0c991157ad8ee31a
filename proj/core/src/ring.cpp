#include "toploc/algebra/ring.hpp"

#include <algorithm>
#include <set>

#include "toploc/error.hpp"

namespace toploc {

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw Error(ErrorCode::Arity, "too many variables in exponent vector");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (e > 0xFFFF) throw Error(ErrorCode::Precondition, "exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0) mask |= (1u << i);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    std::uint32_t e = std::uint32_t(a.exps_[i]) + b.exps_[i];
    if (e > 0xFFFF) throw Error(ErrorCode::Precondition, "exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

namespace {

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0;
  std::uint32_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = nvars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::Block: {
      int c = degrevlex_range(a, b, 0, block);
      if (c != 0) return c;
      return degrevlex_range(a, b, block, nvars);
    }
  }
  return 0;
}

RingSpec::RingSpec(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (variables_.empty()) throw Error(ErrorCode::Precondition, "a ring needs at least one variable");
  if (variables_.size() > kMaxVariables) {
    throw Error(ErrorCode::Unsupported,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size()) {
    throw Error(ErrorCode::Precondition, "ring variable names must be unique");
  }
  if (order_.kind == OrderKind::Block && order_.block > variables_.size()) {
    throw Error(ErrorCode::Precondition, "elimination block larger than the variable list");
  }
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

Ring make_ring(Field field, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const RingSpec>(field, std::move(variables), order);
}

Ring with_order(const Ring& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->variables(), order);
}

Ring with_leading_variables(const Ring& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = extra;
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return make_ring(ring->field(), std::move(vars), MonomialOrder::eliminating(extra.size()));
}

bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace toploc
