#pragma once

#include <span>
#include <string>
#include <vector>

#include "toploc/algebra/ring.hpp"

namespace toploc {

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Sparse polynomial. Terms are kept sorted by decreasing monomial in the
/// ring's order with no zero coefficients, so equal polynomials have equal
/// term vectors.
class Poly {
 public:
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(const Ring& ring, const Scalar& c);
  static Poly variable(const Ring& ring, std::size_t index);
  static Poly term(const Ring& ring, const Monomial& m, const Scalar& c);
  /// Accepts terms in any order, with repeats and zeros.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const noexcept;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  /// Bit i set when variable i occurs in some term.
  std::uint32_t variable_mask() const noexcept;
  /// Lowest total degree among terms; -1 for zero.
  int order() const noexcept;
  Scalar constant_term() const;

  Poly monic() const;
  Poly scaled(const Scalar& c) const;
  Poly times_term(const Monomial& m, const Scalar& c) const;
  /// Exact division by c*m; throws NotDivisible when m fails to divide a term.
  Poly divide_by_term(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  /// Drops terms of total degree >= bound.
  Poly truncated(std::uint32_t bound) const;
  /// Terms of total degree exactly k.
  Poly homogeneous_part(std::uint32_t k) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replaces variable i by images[i]; images share a target ring.
  Poly substitute(std::span<const Poly> images) const;
  /// Renames variables: variable i goes to target variable var_map[i]. A
  /// negative entry means the variable must not occur.
  Poly map_to(const Ring& target, std::span<const int> var_map) const;
  Poly derivative(std::size_t var) const;

  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  bool operator==(const Poly& other) const;

  /// Adds c*m*g to this polynomial in place (the reduction kernel).
  void add_scaled_product(const Scalar& c, const Monomial& m, const Poly& g);

 private:
  Poly(Ring ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

/// Exact polynomial division f / g; throws NotDivisible when g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

std::string monomial_to_string(const RingSpec& ring, const Monomial& m);

void require_same_ring(const Poly& a, const Poly& b);

}  // namespace toploc
