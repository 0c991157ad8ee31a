#include "toploc/algebra/poly.hpp"

#include <algorithm>

#include "toploc/error.hpp"

namespace toploc {

void require_same_ring(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw Error(ErrorCode::RingMismatch, "polynomials belong to different rings");
  }
}

Poly Poly::constant(const Ring& ring, const Scalar& c) {
  if (Field::is_zero(c)) return Poly(ring);
  return Poly(ring, {Term{Monomial(), c}});
}

Poly Poly::variable(const Ring& ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorCode::Arity, "variable index out of range");
  return Poly(ring, {Term{Monomial::variable(index), Scalar(1)}});
}

Poly Poly::term(const Ring& ring, const Monomial& m, const Scalar& c) {
  if (Field::is_zero(c)) return Poly(ring);
  return Poly(ring, {Term{m, c}});
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  const RingSpec& spec = *ring;
  for (const Term& t : terms) {
    if (t.monomial.support() >> spec.nvars() != 0) {
      throw Error(ErrorCode::Arity, "monomial uses a variable outside the ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [&spec](const Term& a, const Term& b) {
    return spec.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  const Field& field = spec.field();
  for (Term& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && Field::is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && Field::is_zero(out.back().coeff)) out.pop_back();
  return Poly(ring, std::move(out));
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Poly::is_homogeneous() const noexcept {
  for (const Term& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

int Poly::total_degree() const noexcept {
  int d = -1;
  for (const Term& t : terms_) d = std::max<int>(d, t.monomial.degree());
  return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::uint32_t Poly::variable_mask() const noexcept {
  std::uint32_t mask = 0;
  for (const Term& t : terms_) mask |= t.monomial.support();
  return mask;
}

int Poly::order() const noexcept {
  if (terms_.empty()) return -1;
  std::uint32_t d = terms_.front().monomial.degree();
  for (const Term& t : terms_) d = std::min(d, t.monomial.degree());
  return static_cast<int>(d);
}

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  for (const Term& t : terms_) {
    if (t.monomial.is_one()) return t.coeff;
  }
  return Scalar(0);
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Poly Poly::scaled(const Scalar& c) const {
  if (Field::is_zero(c)) return Poly(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = field().mul(t.coeff, c);
  return Poly(ring_, std::move(out));
}

Poly Poly::times_term(const Monomial& m, const Scalar& c) const {
  if (Field::is_zero(c)) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.monomial * m, field().mul(t.coeff, c)});
  return Poly(ring_, std::move(out));
}

Poly Poly::divide_by_term(const Monomial& m, const Scalar& c) const {
  Scalar ci = field().inv(c);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!m.divides(t.monomial)) {
      throw Error(ErrorCode::NotDivisible,
                  "term " + monomial_to_string(*ring_, m) + " does not divide " + to_string());
    }
    out.push_back(Term{t.monomial / m, field().mul(t.coeff, ci)});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, Scalar(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::truncated(std::uint32_t bound) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.monomial.degree() < bound) out.push_back(t);
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::homogeneous_part(std::uint32_t k) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.monomial.degree() == k) out.push_back(t);
  }
  return Poly(ring_, std::move(out));
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) {
    throw Error(ErrorCode::Arity, "evaluation point has " + std::to_string(point.size()) +
                                      " coordinates, ring has " + std::to_string(ring_->nvars()) +
                                      " variables");
  }
  const Field& f = field();
  Scalar sum(0);
  for (const Term& t : terms_) {
    Scalar value = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.monomial[i] != 0) value = f.mul(value, f.pow(point[i], t.monomial[i]));
    }
    sum = f.add(sum, value);
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_->nvars()) {
    throw Error(ErrorCode::Arity, "substitution needs one image per variable");
  }
  if (images.empty()) throw Error(ErrorCode::Arity, "empty substitution");
  const Ring& target = images.front().ring();
  // Cache powers per variable.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(target, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Poly result(target);
  for (const Term& t : terms_) {
    Poly value = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] != 0) value = value * power(i, t.monomial[i]);
    }
    result += value;
  }
  return result;
}

Poly Poly::map_to(const Ring& target, std::span<const int> var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] < 0) {
        throw Error(ErrorCode::RingMismatch,
                    "variable " + ring_->variables()[i] + " has no image in the target ring");
      }
      m.set(static_cast<std::size_t>(var_map[i]), m[var_map[i]] + t.monomial[i]);
    }
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    std::uint32_t e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back(Term{m, field().mul(t.coeff, field().from_integer(e))});
  }
  return from_terms(ring_, std::move(out));
}

std::string monomial_to_string(const RingSpec& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variables()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = field();
  std::string s;
  bool first = true;
  for (const Term& t : terms_) {
    Scalar c = t.coeff;
    bool negative = false;
    if (f.kind() == FieldKind::Rationals && sgn(c) < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = (c == 1);
    if (t.monomial.is_one()) {
      s += f.to_string(c);
    } else {
      if (!unit) s += f.to_string(c) + "*";
      s += monomial_to_string(*ring_, t.monomial);
    }
  }
  return s;
}

Poly Poly::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = field().neg(t.coeff);
  return Poly(ring_, std::move(out));
}

namespace {

std::vector<Term> merge_terms(const RingSpec& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  const Field& f = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = ring.compare(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].monomial, subtract ? f.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Scalar s = subtract ? f.sub(a[i].coeff, b[j].coeff) : f.add(a[i].coeff, b[j].coeff);
      if (!Field::is_zero(s)) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(*ring_, terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(*ring_, terms_, other.terms_, true);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring());
  const Field& f = a.field();
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) out.push_back(Term{s.monomial * t.monomial, f.mul(s.coeff, t.coeff)});
  }
  return Poly::from_terms(a.ring(), std::move(out));
}

bool Poly::operator==(const Poly& other) const {
  if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

void Poly::add_scaled_product(const Scalar& c, const Monomial& m, const Poly& g) {
  if (Field::is_zero(c) || g.is_zero()) return;
  const Field& f = field();
  std::vector<Term> scaled;
  scaled.reserve(g.terms_.size());
  for (const Term& t : g.terms_) scaled.push_back(Term{t.monomial * m, f.mul(t.coeff, c)});
  terms_ = merge_terms(*ring_, terms_, scaled, false);
}

Poly divide_exact(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  const Field& field = f.field();
  Poly remainder = f;
  std::vector<Term> quotient;
  const Monomial& lm = g.leading_monomial();
  const Scalar lc_inv = field.inv(g.leading_coeff());
  while (!remainder.is_zero()) {
    const Term& lt = remainder.leading_term();
    if (!lm.divides(lt.monomial)) {
      throw Error(ErrorCode::NotDivisible, g.to_string() + " does not divide " + f.to_string());
    }
    Monomial q = lt.monomial / lm;
    Scalar c = field.mul(lt.coeff, lc_inv);
    quotient.push_back(Term{q, c});
    remainder.add_scaled_product(field.neg(c), q, g);
  }
  return Poly::from_terms(f.ring(), std::move(quotient));
}

}  // namespace toploc
