#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "toploc/algebra/poly_parse.hpp"
#include "toploc/groebner/ideal.hpp"
#include "toploc/variety/prime.hpp"

namespace toploc::testing {

inline Ring qq(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex()) {
  return make_ring(Field::rationals(), std::move(vars), order);
}

inline Ring fp(std::uint32_t p, std::vector<std::string> vars) { return make_ring(Field::prime(p), std::move(vars)); }

inline Poly P(const Ring& r, std::string_view text) { return parse_poly(r, text); }

inline IdealHandle I(const Ring& r, std::initializer_list<std::string_view> gens) {
  std::vector<Poly> ps;
  for (std::string_view g : gens) ps.push_back(parse_poly(r, g));
  return IdealHandle(r, std::move(ps));
}

inline std::vector<std::vector<std::string>> keys(const std::vector<PrimeCert>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const PrimeCert& p : ps) out.push_back(p.key());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<std::string>> keys(const std::vector<IdealHandle>& is) {
  std::vector<std::vector<std::string>> out;
  for (const IdealHandle& i : is) out.push_back(i.canonical_generators());
  std::sort(out.begin(), out.end());
  return out;
}

/// Seeded generator of small random algebraic data.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  Scalar scalar(const Field& f, int range = 5) {
    Scalar c = f.from_integer(uniform(-range, range));
    if (!f.is_prime_field() && coin()) c /= uniform(1, 3);
    return f.from_rational(c);
  }

  Monomial monomial(std::size_t nvars, int max_degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    int budget = uniform(0, max_degree);
    for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))];
    return Monomial(std::span<const std::uint32_t>(e));
  }

  Poly poly(const Ring& r, int max_terms, int max_degree) {
    std::vector<Term> ts;
    int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) ts.push_back(Term{monomial(r->nvars(), max_degree), scalar(r->field())});
    return Poly::from_terms(r, std::move(ts));
  }

  std::vector<Scalar> point(const Field& f, std::size_t n, int range = 4) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(f.from_integer(uniform(-range, range)));
    return out;
  }

  /// Random antichain of nonempty proper-or-full subsets of n vertices.
  std::vector<std::uint32_t> antichain(unsigned n, int max_sets) {
    std::vector<std::uint32_t> sets;
    int k = uniform(1, max_sets);
    for (int i = 0; i < k; ++i) {
      std::uint32_t s = static_cast<std::uint32_t>(uniform(1, (1 << n) - 1));
      sets.push_back(s);
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t s : sets) {
      bool minimal = std::none_of(sets.begin(), sets.end(), [&](std::uint32_t t) { return t != s && (t & s) == t; });
      if (minimal && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

/// Squarefree monomial ideal whose generators are the given supports.
inline IdealHandle squarefree_ideal(const Ring& r, const std::vector<std::uint32_t>& supports) {
  std::vector<Poly> gens;
  for (std::uint32_t s : supports) {
    Monomial m;
    for (std::size_t i = 0; i < r->nvars(); ++i) {
      if (s & (1u << i)) m = m * Monomial::variable(i);
    }
    gens.push_back(Poly::term(r, m, Scalar(1)));
  }
  return IdealHandle(r, std::move(gens));
}

/// All antichains of nonempty subsets of an n-set, excluding the empty antichain.
inline std::vector<std::vector<std::uint32_t>> all_antichains(unsigned n) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < (1u << n); ++s) subsets.push_back(s);
  std::vector<std::vector<std::uint32_t>> out;
  const std::size_t m = subsets.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<std::uint32_t> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick & (std::uint64_t{1} << i)) chosen.push_back(subsets[i]);
    }
    bool anti = true;
    for (std::uint32_t a : chosen) {
      for (std::uint32_t b : chosen) {
        if (a != b && (a & b) == a) anti = false;
      }
    }
    if (anti) out.push_back(chosen);
  }
  return out;
}

}  // namespace toploc::testing
