#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toploc/algebra/field.hpp"
#include "toploc/algebra/monomial.hpp"

namespace toploc {

/// Polynomial ring K[x_1..x_n] with a fixed monomial order.
class RingSpec {
 public:
  RingSpec(Field field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::degrevlex());

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return order_.compare(a, b, variables_.size());
  }

  bool operator==(const RingSpec& other) const {
    return field_ == other.field_ && variables_ == other.variables_ && order_ == other.order_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(Field field, std::vector<std::string> variables,
               MonomialOrder order = MonomialOrder::degrevlex());

/// Same field and variables, different order.
Ring with_order(const Ring& ring, MonomialOrder order);

/// Prepends fresh variables and uses an order eliminating them.
Ring with_leading_variables(const Ring& ring, const std::vector<std::string>& extra);

bool same_ring(const Ring& a, const Ring& b);

}  // namespace toploc
