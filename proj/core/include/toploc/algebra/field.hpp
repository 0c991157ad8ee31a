#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace toploc {

/// Field element. Rationals are kept in lowest terms; prime-field elements are
/// stored as integers in [0, p).
using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field: QQ or F_p with p prime and p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(std::uint32_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }

  /// "QQ" or "F<p>", matching the DSL ring syntax.
  std::string name() const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_integer(long value) const;
  /// Maps a rational into the field; throws when the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, std::uint64_t e) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  /// Square root in the field when one exists (char 2 excluded).
  std::optional<Scalar> sqrt(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;

  bool operator==(const Field& other) const noexcept {
    return kind_ == other.kind_ && p_ == other.p_;
  }

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  static std::uint64_t raw(const Scalar& a) { return a.get_num().get_ui(); }

  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

}  // namespace toploc
