#include "toploc/analytic/series.hpp"

#include <algorithm>

#include "toploc/error.hpp"

namespace toploc {

Univariate series_add(const Field& field, const Univariate& a, const Univariate& b, std::size_t precision) {
  Univariate out(std::min(precision, std::max(a.size(), b.size())), field.zero());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.size()) out[k] = field.add(out[k], a[k]);
    if (k < b.size()) out[k] = field.add(out[k], b[k]);
  }
  return out;
}

Univariate series_mul(const Field& field, const Univariate& a, const Univariate& b, std::size_t precision) {
  if (a.empty() || b.empty()) return {};
  Univariate out(std::min(precision, a.size() + b.size() - 1), field.zero());
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (Field::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
      out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
  }
  return out;
}

Univariate evaluate_along(const Poly& F, const Univariate& w, std::size_t precision) {
  if (F.ring()->nvars() != 2) throw Error(ErrorCode::Arity, "evaluate_along needs a two-variable ring");
  const Field& field = F.field();
  std::vector<Univariate> powers{Univariate{field.one()}};
  const std::uint32_t max_w = F.degree_in(1);
  for (std::uint32_t j = 1; j <= max_w; ++j) powers.push_back(series_mul(field, powers.back(), w, precision));
  Univariate out(precision, field.zero());
  for (const Term& t : F.terms()) {
    const std::size_t shift = t.monomial[0];
    const Univariate& wp = powers[t.monomial[1]];
    for (std::size_t k = 0; k < wp.size() && shift + k < precision; ++k) {
      out[shift + k] = field.add(out[shift + k], field.mul(t.coeff, wp[k]));
    }
  }
  return out;
}

Univariate sqrt_one_plus(const Field& field, std::size_t precision) {
  Univariate out;
  mpq_class binom = 1;
  for (std::size_t k = 0; k < precision; ++k) {
    out.push_back(field.from_rational(binom));
    binom *= mpq_class(1, 2) - static_cast<long>(k);
    binom /= static_cast<long>(k + 1);
  }
  return out;
}

}  // namespace toploc
