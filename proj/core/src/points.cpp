#include "toploc/variety/points.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "toploc/error.hpp"
#include "toploc/groebner/groebner.hpp"
#include "toploc/groebner/ideal_ops.hpp"

namespace toploc {

namespace {

void trim(Univariate& f) {
  while (!f.empty() && Field::is_zero(f.back())) f.pop_back();
}

Scalar horner(const Field& field, const Univariate& f, const Scalar& x) {
  Scalar acc = field.zero();
  for (std::size_t k = f.size(); k-- > 0;) acc = field.add(field.mul(acc, x), f[k]);
  return acc;
}

/// f / (x - r) when r is a root.
Univariate deflate(const Field& field, const Univariate& f, const Scalar& r) {
  Univariate q(f.size() - 1);
  Scalar carry = field.zero();
  for (std::size_t k = f.size(); k-- > 1;) {
    carry = field.add(field.mul(carry, r), f[k]);
    q[k - 1] = carry;
  }
  return q;
}

// Integer divisor enumeration for the rational root theorem.

constexpr unsigned long kTrialLimit = 1'000'000;
constexpr std::size_t kDivisorLimit = 20'000;

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; ++p) {
    if (mpz_class(p) * p > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(mpz_class(p), e);
  }
  if (n > 1) {
    mpz_class limit = mpz_class(kTrialLimit) * kTrialLimit;
    if (n > limit) {
      throw Error(ErrorCode::Unsupported, "coefficient too large for rational root search");
    }
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (unsigned k = 0; k < e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
      if (out.size() > kDivisorLimit) {
        throw Error(ErrorCode::Unsupported, "too many divisors for rational root search");
      }
    }
  }
  return out;
}

std::vector<Scalar> rational_root_candidates(const Univariate& f) {
  mpz_class den_lcm = 1;
  for (const Scalar& c : f) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const Scalar& c : f) ints.push_back(mpz_class(c * den_lcm));
  std::vector<Scalar> out;
  for (const mpz_class& p : divisors(ints.front())) {
    for (const mpz_class& q : divisors(ints.back())) {
      Scalar r(p, q);
      r.canonicalize();
      out.push_back(r);
      out.push_back(-r);
    }
  }
  return out;
}

// Root finding over F_p with p large: gcd with x^p - x, then equal-degree splitting.

using Fp = std::vector<std::uint64_t>;

struct FpArith {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  void trim(Fp& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  Fp mod(Fp a, const Fp& b) const {
    trim(a);
    std::uint64_t lead_inv = inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t c = mul(a.back(), lead_inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + p - mul(c, b[i])) % p;
      }
      trim(a);
    }
    return a;
  }
  Fp divide(Fp a, const Fp& b) const {
    trim(a);
    Fp q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    std::uint64_t lead_inv = inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t c = mul(a.back(), lead_inv);
      std::size_t shift = a.size() - b.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + p - mul(c, b[i])) % p;
      }
      trim(a);
    }
    return q;
  }
  Fp mulmod(const Fp& a, const Fp& b, const Fp& m) const {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul(a[i], b[j])) % p;
    }
    return mod(std::move(r), m);
  }
  Fp powmod(Fp base, std::uint64_t e, const Fp& m) const {
    Fp r{1};
    base = mod(std::move(base), m);
    while (e) {
      if (e & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }
  Fp gcd(Fp a, Fp b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Fp r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty()) {
      std::uint64_t li = inv(a.back());
      for (auto& c : a) c = mul(c, li);
    }
    return a;
  }
  Fp sub(Fp a, const Fp& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
  }

  /// Roots of a monic squarefree product of distinct linear factors.
  void split(const Fp& g, std::mt19937_64& rng, std::vector<std::uint64_t>& out) const {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
      out.push_back((p - g[0]) % p);
      return;
    }
    while (true) {
      std::uint64_t delta = rng() % p;
      Fp h = powmod(Fp{delta, 1}, (p - 1) / 2, g);
      Fp d = gcd(g, sub(h, Fp{1}));
      if (d.size() > 1 && d.size() < g.size()) {
        split(d, rng, out);
        split(divide(g, d), rng, out);
        return;
      }
    }
  }
};

std::vector<Scalar> prime_field_roots(const Field& field, const Univariate& f) {
  const std::uint64_t p = field.characteristic();
  std::vector<Scalar> out;
  if (p <= 200'000) {
    std::vector<std::uint64_t> c;
    for (const Scalar& s : f) c.push_back(s.get_num().get_ui());
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t k = c.size(); k-- > 0;) acc = (acc * x + c[k]) % p;
      if (acc == 0) out.push_back(Scalar(static_cast<unsigned long>(x)));
    }
    return out;
  }
  FpArith ar{p};
  Fp poly;
  for (const Scalar& s : f) poly.push_back(s.get_num().get_ui());
  Fp xp = ar.powmod(Fp{0, 1}, p, poly);
  Fp g = ar.gcd(poly, ar.sub(xp, Fp{0, 1}));
  std::mt19937_64 rng(0x5eed);
  std::vector<std::uint64_t> roots;
  ar.split(g, rng, roots);
  for (std::uint64_t r : roots) out.push_back(Scalar(static_cast<unsigned long>(r)));
  return out;
}

bool point_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void descend(const Ring& lex, std::vector<Poly> gens, std::vector<Scalar>& partial, PointSet& out) {
  const std::size_t n = lex->nvars();
  auto basis = gb::reduced_groebner_basis(lex, std::move(gens));
  if (basis.size() == 1 && basis.front().is_constant()) return;
  const std::size_t assigned = partial.size();
  if (assigned == n) {
    std::vector<Scalar> point(partial.rbegin(), partial.rend());
    out.points.push_back(std::move(point));
    return;
  }
  const std::size_t var = n - 1 - assigned;
  const Poly* eliminant = nullptr;
  for (const Poly& g : basis) {
    if (g.variable_mask() == (1u << var)) {
      eliminant = &g;
      break;
    }
  }
  if (eliminant == nullptr) throw Error(ErrorCode::Internal, "lex basis lacks an eliminant");
  RootSet roots = univariate_roots(lex->field(), *as_univariate(*eliminant, var));
  if (!roots.splits) out.complete = false;
  for (const Root& r : roots.roots) {
    std::vector<Poly> next = basis;
    next.push_back(Poly::variable(lex, var) - Poly::constant(lex, r.value));
    partial.push_back(r.value);
    descend(lex, std::move(next), partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::optional<Univariate> as_univariate(const Poly& f, std::size_t var) {
  if (f.variable_mask() & ~(1u << var)) return std::nullopt;
  Univariate out(f.is_zero() ? 0 : f.degree_in(var) + 1, Scalar(0));
  for (const Term& t : f.terms()) out[t.monomial[var]] = t.coeff;
  return out;
}

RootSet univariate_roots(const Field& field, Univariate f) {
  trim(f);
  if (f.empty()) throw Error(ErrorCode::Precondition, "roots of the zero polynomial");
  const std::size_t degree = f.size() - 1;
  std::map<Scalar, unsigned> found;
  std::size_t zeros = 0;
  while (zeros < f.size() && Field::is_zero(f[zeros])) ++zeros;
  if (zeros) {
    found[field.zero()] = static_cast<unsigned>(zeros);
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(zeros));
  }
  if (f.size() > 1) {
    std::vector<Scalar> candidates =
        field.is_prime_field() ? prime_field_roots(field, f) : rational_root_candidates(f);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Scalar& r : candidates) {
      unsigned mult = 0;
      while (f.size() > 1 && Field::is_zero(horner(field, f, r))) {
        f = deflate(field, f, r);
        ++mult;
      }
      if (mult) found[r] += mult;
    }
  }
  RootSet out;
  std::size_t total = 0;
  for (const auto& [value, mult] : found) {
    out.roots.push_back(Root{value, mult});
    total += mult;
  }
  out.splits = total == degree;
  return out;
}

PointSet rational_points(const IdealHandle& ideal) {
  PointSet out{{}, true};
  int dim = gb::dimension(ideal);
  if (dim < 0) return out;
  if (dim > 0) throw Error(ErrorCode::Precondition, "rational_points needs a zero-dimensional ideal");
  Ring lex = with_order(ideal.ring(), MonomialOrder::lex());
  std::vector<int> identity(ideal.ring()->nvars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  std::vector<Poly> gens;
  for (const Poly& g : ideal.generators()) gens.push_back(g.map_to(lex, identity));
  std::vector<Scalar> partial;
  descend(lex, std::move(gens), partial, out);
  std::sort(out.points.begin(), out.points.end(), point_less);
  return out;
}

IdealHandle point_ideal(const Ring& ring, const std::vector<Scalar>& point) {
  if (point.size() != ring->nvars()) throw Error(ErrorCode::Arity, "point has wrong length");
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < point.size(); ++i) {
    gens.push_back(Poly::variable(ring, i) - Poly::constant(ring, ring->field().from_rational(point[i])));
  }
  return IdealHandle(ring, std::move(gens));
}

std::optional<std::vector<Scalar>> as_rational_point(const IdealHandle& ideal) {
  const auto& basis = ideal.groebner_basis();
  const std::size_t n = ideal.ring()->nvars();
  if (basis.size() != n) return std::nullopt;
  std::vector<Scalar> point(n);
  std::vector<bool> seen(n, false);
  const Field& field = ideal.ring()->field();
  for (const Poly& g : basis) {
    if (g.total_degree() != 1 || g.size() > 2 || !std::has_single_bit(g.variable_mask())) return std::nullopt;
    std::size_t var = static_cast<std::size_t>(std::countr_zero(g.variable_mask()));
    if (seen[var]) return std::nullopt;
    seen[var] = true;
    point[var] = field.neg(g.constant_term());
  }
  return point;
}

bool is_isolated_point(const IdealHandle& J, const IdealHandle& m) {
  if (!gb::contains(m, J)) return false;
  for (const Poly& f : m.generators()) {
    if (gb::contains(m, gb::saturate(J, f))) return false;
  }
  return true;
}

std::optional<std::vector<std::vector<Scalar>>> scan_points(const IdealHandle& ideal, std::uint64_t limit) {
  const Field& field = ideal.ring()->field();
  if (!field.is_prime_field()) return std::nullopt;
  const std::uint64_t p = field.characteristic();
  const std::size_t n = ideal.ring()->nvars();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / p) return std::nullopt;
    total *= p;
  }
  std::vector<std::vector<Scalar>> out;
  std::vector<Scalar> point(n, field.zero());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      point[i] = Scalar(static_cast<unsigned long>(c % p));
      c /= p;
    }
    bool zero = true;
    for (const Poly& g : ideal.generators()) {
      if (!Field::is_zero(g.evaluate(point))) {
        zero = false;
        break;
      }
    }
    if (zero) out.push_back(point);
  }
  return out;
}

}  // namespace toploc
