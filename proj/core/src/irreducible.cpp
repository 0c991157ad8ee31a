#include "toploc/variety/irreducible.hpp"

#include <bit>

#include "toploc/variety/points.hpp"

namespace toploc {

namespace {

std::optional<Term> term_sqrt(const Term& t, const Field& field, std::size_t nvars) {
  Monomial root;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (t.monomial[i] % 2 != 0) return std::nullopt;
    root.set(i, t.monomial[i] / 2);
  }
  auto c = field.sqrt(t.coeff);
  if (!c) return std::nullopt;
  return Term{root, *c};
}

/// Coefficients of f as a polynomial in variable `var`: result[k] is the
/// coefficient of var^k.
std::vector<Poly> coefficients_in(const Poly& f, std::size_t var) {
  std::vector<std::vector<Term>> parts(f.degree_in(var) + 1);
  for (const Term& t : f.terms()) {
    Monomial m = t.monomial;
    std::uint32_t k = m[var];
    m.set(var, 0);
    parts[k].push_back(Term{m, t.coeff});
  }
  std::vector<Poly> out;
  for (auto& p : parts) out.push_back(Poly::from_terms(f.ring(), std::move(p)));
  return out;
}

}  // namespace

std::optional<Poly> poly_sqrt(const Poly& f) {
  if (f.is_zero()) return f;
  const Field& field = f.field();
  if (field.characteristic() == 2) return std::nullopt;
  const std::size_t n = f.ring()->nvars();
  auto lead = term_sqrt(f.leading_term(), field, n);
  if (!lead) return std::nullopt;
  const int max_degree = f.total_degree() / 2;
  Poly root = Poly::term(f.ring(), lead->monomial, lead->coeff);
  Scalar twice_lead = field.add(lead->coeff, lead->coeff);
  Poly rest = f - root * root;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!lead->monomial.divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial / lead->monomial;
    if (static_cast<int>(m.degree()) > max_degree) return std::nullopt;
    Poly t = Poly::term(f.ring(), m, field.div(lt.coeff, twice_lead));
    root += t;
    rest = f - root * root;
  }
  return root;
}

bool certify_irreducible(const Poly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  if (f.total_degree() == 1) return true;
  const Field& field = f.field();
  const std::uint32_t mask = f.variable_mask();
  const std::size_t n = f.ring()->nvars();
  if (std::has_single_bit(mask)) {
    std::size_t var = static_cast<std::size_t>(std::countr_zero(mask));
    auto uni = as_univariate(f, var);
    if (uni && (uni->size() == 3 || uni->size() == 4)) {
      return univariate_roots(field, *uni).roots.empty();
    }
    return false;
  }
  for (std::size_t var = 0; var < n; ++var) {
    if (!(mask & (1u << var))) continue;
    std::uint32_t deg = f.degree_in(var);
    if (deg != 1 && deg != 2) continue;
    auto coeffs = coefficients_in(f, var);
    if (!coeffs[deg].is_constant()) continue;
    if (deg == 1) return true;
    if (field.characteristic() == 2) continue;
    Poly disc = coeffs[1] * coeffs[1] - coeffs[2] * coeffs[0] * Poly::constant(f.ring(), field.from_integer(4));
    if (!poly_sqrt(disc)) return true;
  }
  return false;
}

}  // namespace toploc
