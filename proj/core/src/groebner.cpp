#include "toploc/groebner/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <tuple>

#include "toploc/error.hpp"

namespace toploc::gb {

namespace {

std::atomic<std::size_t> g_default_budget{1'000'000};

/// Polynomial under reduction, terms in ascending order so the leading term
/// sits at the back.
using Ascending = std::vector<Term>;

class Reducer {
 public:
  Reducer(const RingSpec& ring, std::size_t budget) : ring_(ring), field_(ring.field()), budget_(budget) {}

  std::size_t steps() const noexcept { return steps_; }

  static Ascending ascending(const Poly& p) { return Ascending(p.terms().rbegin(), p.terms().rend()); }

  Poly to_poly(const Ring& ring, Ascending terms) const {
    return Poly::from_terms(ring, std::move(terms));
  }

  /// Full reduction of p modulo basis.
  Ascending reduce(Ascending p, std::span<const Poly* const> basis) {
    Ascending remainder;  // collected in descending order
    while (!p.empty()) {
      const Term lt = p.back();
      const Poly* divisor = nullptr;
      for (const Poly* g : basis) {
        if (g->leading_monomial().divides(lt.monomial)) {
          divisor = g;
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(lt);
        p.pop_back();
        continue;
      }
      if (++steps_ > budget_) {
        throw Error(ErrorCode::Budget, "Groebner step budget of " + std::to_string(budget_) +
                                           " reductions exceeded");
      }
      Scalar c = field_.neg(field_.div(lt.coeff, divisor->leading_coeff()));
      Monomial m = lt.monomial / divisor->leading_monomial();
      p.pop_back();
      subtract_multiple(p, c, m, *divisor);
    }
    std::reverse(remainder.begin(), remainder.end());
    return remainder;
  }

 private:
  /// p += c*m*g, skipping g's leading term, which is known to cancel.
  void subtract_multiple(Ascending& p, const Scalar& c, const Monomial& m, const Poly& g) {
    const auto& gt = g.terms();
    if (gt.size() <= 1) return;
    Ascending scaled;
    scaled.reserve(gt.size() - 1);
    for (std::size_t k = gt.size(); k-- > 1;) {
      scaled.push_back(Term{gt[k].monomial * m, field_.mul(gt[k].coeff, c)});
    }
    Ascending out;
    out.reserve(p.size() + scaled.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < p.size() || j < scaled.size()) {
      int cmp;
      if (i == p.size()) {
        cmp = 1;
      } else if (j == scaled.size()) {
        cmp = -1;
      } else {
        cmp = ring_.compare(p[i].monomial, scaled[j].monomial);
      }
      if (cmp < 0) {
        out.push_back(std::move(p[i++]));
      } else if (cmp > 0) {
        out.push_back(std::move(scaled[j++]));
      } else {
        Scalar s = field_.add(p[i].coeff, scaled[j].coeff);
        if (!Field::is_zero(s)) out.push_back(Term{p[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    p = std::move(out);
  }

  const RingSpec& ring_;
  const Field& field_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

Poly s_polynomial(const Poly& f, const Poly& g, const Monomial& l) {
  const Field& field = f.field();
  Poly a = f.times_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  Poly b = g.times_term(l / g.leading_monomial(), field.inv(g.leading_coeff()));
  return a - b;
}

class Buchberger {
 public:
  Buchberger(const Ring& ring, std::size_t budget) : ring_(ring), reducer_(*ring, budget) {}

  std::vector<Poly> run(std::vector<Poly> generators) {
    for (Poly& g : generators) {
      if (!same_ring(g.ring(), ring_)) {
        throw Error(ErrorCode::RingMismatch, "generator belongs to a different ring");
      }
    }
    // Shorter generators first keeps the initial reductions cheap.
    std::stable_sort(generators.begin(), generators.end(), [this](const Poly& a, const Poly& b) {
      if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (const Poly& g : generators) {
      if (g.is_zero()) continue;
      if (!insert(reduce_against_active(g))) return {Poly::constant(ring_, Scalar(1))};
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        int c = ring_->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      Pair pair = *best;
      pairs_.erase(best);
      Poly s = s_polynomial(store_[pair.i], store_[pair.j], pair.lcm);
      if (!insert(reduce_against_active(s))) return {Poly::constant(ring_, Scalar(1))};
    }
    return finish();
  }

 private:
  Poly reduce_against_active(const Poly& f) {
    std::vector<const Poly*> basis;
    for (std::size_t k = 0; k < store_.size(); ++k) {
      if (active_[k]) basis.push_back(&store_[k]);
    }
    return reducer_.to_poly(ring_, reducer_.reduce(Reducer::ascending(f), basis));
  }

  /// Adds h to the basis; false when h is a nonzero constant.
  bool insert(const Poly& h_raw) {
    if (h_raw.is_zero()) return true;
    if (h_raw.is_constant()) return false;
    Poly h = h_raw.monic();
    const std::size_t hi = store_.size();
    store_.push_back(h);
    active_.push_back(false);
    const Monomial& lh = h.leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) candidates.push_back(Pair{k, hi, lcm(store_[k].leading_monomial(), lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool coprime = store_[p.i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t o = c + 1; o < candidates.size() && !dominated; ++o) {
          dominated = candidates[o].lcm.divides(p.lcm);
        }
        for (const Pair& k : kept) {
          if (dominated) break;
          dominated = k.lcm.divides(p.lcm);
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const Pair& p : kept) {
      if (!store_[p.i].leading_monomial().coprime(lh)) fresh.push_back(p);
    }
    std::vector<Pair> survivors;
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(store_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(store_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) survivors.push_back(p);
    }
    survivors.insert(survivors.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(survivors);
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(store_[k].leading_monomial())) active_[k] = false;
    }
    active_[hi] = true;
    return true;
  }

  std::vector<Poly> finish() {
    std::vector<Poly> basis;
    for (std::size_t k = 0; k < store_.size(); ++k) {
      if (active_[k]) basis.push_back(store_[k]);
    }
    // Drop elements whose leading monomial is divisible by another one.
    std::vector<Poly> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
        if (a == b) continue;
        const Monomial& la = basis[a].leading_monomial();
        const Monomial& lb = basis[b].leading_monomial();
        redundant = lb.divides(la) && (!(la == lb) || b < a);
      }
      if (!redundant) minimal.push_back(basis[a]);
    }
    std::vector<Poly> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Poly*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (a != b) others.push_back(&minimal[b]);
      }
      const Term lead = minimal[a].leading_term();
      Ascending tail = Reducer::ascending(minimal[a]);
      tail.pop_back();
      Ascending r = reducer_.reduce(std::move(tail), others);
      r.push_back(lead);
      reduced.push_back(Poly::from_terms(ring_, std::move(r)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Poly& a, const Poly& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
  }

  Ring ring_;
  Reducer reducer_;
  std::vector<Poly> store_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::size_t default_step_budget() noexcept { return g_default_budget.load(); }

void set_default_step_budget(std::size_t steps) noexcept { g_default_budget.store(steps); }

std::vector<Poly> reduced_groebner_basis(const Ring& ring, std::vector<Poly> generators,
                                         std::size_t budget) {
  return Buchberger(ring, budget).run(std::move(generators));
}

Poly normal_form(const Poly& f, std::span<const Poly> basis) {
  Reducer reducer(*f.ring(), default_step_budget());
  std::vector<const Poly*> pointers;
  for (const Poly& g : basis) {
    require_same_ring(f, g);
    if (!g.is_zero()) pointers.push_back(&g);
  }
  return reducer.to_poly(f.ring(), reducer.reduce(Reducer::ascending(f), pointers));
}

}  // namespace toploc::gb
