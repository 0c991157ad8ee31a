#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace toploc {

/// Upper bound on variables per ring, auxiliary elimination variables included.
inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with cached total degree. Unused slots stay zero, so
/// comparisons never need the variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exponents);

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e);
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Bit i set when variable i occurs.
  std::uint32_t support() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

enum class OrderKind { Lex, DegRevLex, Block };

/// Block orders compare the first `block` variables by degrevlex, then the rest
/// by degrevlex; they are elimination orders for the first block.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder eliminating(std::size_t first_k) { return {OrderKind::Block, first_k}; }

  /// <0, 0, >0 like strcmp.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept;

  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace toploc
