#include "toploc/analytic/branches.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "toploc/analytic/series.hpp"
#include "toploc/error.hpp"
#include "toploc/groebner/groebner.hpp"

namespace toploc {

namespace {

/// Poly in K[t, w] with t = `first` and w = `second` of f's ring; f may only
/// involve those two variables.
Poly restrict_to_pair(const Poly& f, std::size_t first, std::size_t second) {
  const auto& names = f.ring()->variables();
  Ring pair = make_ring(f.field(), {names[first], names[second]});
  std::vector<int> map(f.ring()->nvars(), -1);
  map[first] = 0;
  map[second] = 1;
  return f.map_to(pair, map);
}

/// g(t + a_t, w + a_w) in the same two-variable ring.
Poly translate(const Poly& g, const Scalar& at, const Scalar& aw) {
  const Ring& ring = g.ring();
  std::vector<Poly> images{Poly::variable(ring, 0) + Poly::constant(ring, at),
                           Poly::variable(ring, 1) + Poly::constant(ring, aw)};
  return g.substitute(images);
}

/// Series w(s) with G(s, w(s)) = 0, w(0) = w0, lifted one coefficient at a time.
Univariate lift(const Poly& G, const Scalar& w0, std::size_t length) {
  const Field& field = G.field();
  std::vector<Scalar> at{field.zero(), w0};
  Scalar slope = G.derivative(1).evaluate(at);
  if (Field::is_zero(slope)) throw Error(ErrorCode::Internal, "lifting from a multiple root");
  Univariate w{w0};
  for (std::size_t k = 1; k < length; ++k) {
    w.push_back(field.zero());
    Scalar residual = evaluate_along(G, w, k + 1)[k];
    w[k] = field.neg(field.div(residual, slope));
  }
  return w;
}

/// Branch series phi(t) = t * w(t) for the chart (t, w) -> (t, t*w) of g,
/// where g is translated to the origin, has order m, and `first` is the
/// parameter.
Univariate branch_series(const Poly& g, unsigned m, const Scalar& root, unsigned N) {
  const Ring& ring = g.ring();
  Poly t = Poly::variable(ring, 0);
  Poly w = Poly::variable(ring, 1);
  std::vector<Poly> images{t, t * w};
  Poly G = g.substitute(images).divide_by_term(Monomial::variable(0, m), Scalar(1));
  Univariate ws = lift(G, root, N > 1 ? N - 1 : 1);
  Univariate phi(N, g.field().zero());
  for (std::size_t k = 1; k < N && k - 1 < ws.size(); ++k) phi[k] = ws[k - 1];
  return phi;
}

Poly shifted_variable(const Ring& ring, std::size_t var, const Scalar& c) {
  return Poly::variable(ring, var) - Poly::constant(ring, c);
}

struct Chart {
  std::size_t solved;
  std::size_t parameter;
  Scalar slope;
};

std::vector<BranchDatum> compute(const Poly& f, const std::vector<Scalar>& center, unsigned N) {
  const Ring& ring = f.ring();
  const Field& field = f.field();
  const std::uint32_t mask = f.variable_mask();
  std::vector<BranchDatum> out;
  if (std::popcount(mask) == 1) {
    std::size_t u = static_cast<std::size_t>(std::countr_zero(mask));
    auto uni = as_univariate(f, u);
    RootSet roots = univariate_roots(field, *uni);
    unsigned mult = 0;
    for (const Root& r : roots.roots) {
      if (r.value == center[u]) mult = r.multiplicity;
    }
    if (mult != 1) throw Error(ErrorCode::UnsupportedSingularity, "repeated factor " + f.to_string());
    BranchDatum b{f, center, u, std::nullopt, shifted_variable(ring, u, center[u]).to_string(), Univariate{}, N, true};
    out.push_back(std::move(b));
    return out;
  }
  if (std::popcount(mask) != 2) {
    throw Error(ErrorCode::Unsupported, "branch analysis needs a curve in two variables: " + f.to_string());
  }
  const std::size_t u = static_cast<std::size_t>(std::countr_zero(mask));
  const std::size_t v = static_cast<std::size_t>(31 - std::countl_zero(mask));
  Poly g = translate(restrict_to_pair(f, u, v), center[u], center[v]);
  const int m = g.order();
  Poly cone = g.homogeneous_part(static_cast<std::uint32_t>(m));
  Univariate q(static_cast<std::size_t>(m) + 1, field.zero());
  for (const Term& t : cone.terms()) q[t.monomial[1]] = t.coeff;
  while (!q.empty() && Field::is_zero(q.back())) q.pop_back();
  const int degree = static_cast<int>(q.size()) - 1;
  const int u_multiplicity = m - degree;
  const auto& names = ring->variables();
  if (u_multiplicity > 1) {
    throw Error(ErrorCode::UnsupportedSingularity,
                "repeated tangent " + names[u] + " in the tangent cone " + cone.to_string());
  }
  std::vector<Chart> charts;
  if (degree > 0) {
    RootSet roots = univariate_roots(field, q);
    if (!roots.splits) {
      throw Error(ErrorCode::UnsupportedSingularity,
                  "tangent cone " + cone.to_string() + " does not split into distinct rational lines");
    }
    for (const Root& r : roots.roots) {
      if (r.multiplicity > 1) {
        throw Error(ErrorCode::UnsupportedSingularity, "repeated tangent in the tangent cone " + cone.to_string());
      }
      charts.push_back(Chart{v, u, r.value});
    }
  }
  if (u_multiplicity == 1) charts.push_back(Chart{u, v, field.zero()});

  for (const Chart& c : charts) {
    Poly local = c.parameter == u ? g : translate(restrict_to_pair(f, v, u), center[v], center[u]);
    Poly tangent = shifted_variable(ring, c.solved, center[c.solved]) -
                   shifted_variable(ring, c.parameter, center[c.parameter]).scaled(c.slope);
    BranchDatum b{f, center, c.solved, c.parameter, tangent.to_string(),
                  branch_series(local, static_cast<unsigned>(m), c.slope, N), N, false};
    // Vanishing of f along the branch to order N.
    Univariate along = evaluate_along(local, b.series, N);
    for (const Scalar& s : along) {
      if (!Field::is_zero(s)) throw Error(ErrorCode::Internal, "branch series does not solve the curve");
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::string BranchDatum::to_string() const {
  const Ring& ring = curve.ring();
  const auto& names = ring->variables();
  std::string lhs = shifted_variable(ring, solved, center[solved]).to_string();
  if (!parameter) return lhs + " = 0";
  bool at_zero = Field::is_zero(center[*parameter]);
  std::string var = at_zero ? names[*parameter] : "t";
  const Field& field = ring->field();
  std::string rhs;
  for (std::size_t k = 0; k < series.size(); ++k) {
    if (Field::is_zero(series[k])) continue;
    Scalar c = series[k];
    bool negative = field.is_prime_field() ? false : sgn(c) < 0;
    if (negative) c = -c;
    std::string coeff = field.to_string(c);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string piece = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
    if (rhs.empty()) {
      rhs = negative ? "-" + piece : piece;
    } else {
      rhs += negative ? " - " + piece : " + " + piece;
    }
  }
  if (rhs.empty()) rhs = "0";
  std::string text = lhs + " = " + rhs + " + O(" + var + "^" + std::to_string(truncation) + ")";
  if (!at_zero) text += " with t = " + shifted_variable(ring, *parameter, center[*parameter]).to_string();
  return text;
}

std::vector<BranchDatum> plane_branches(const Poly& f, const std::vector<Scalar>& center, unsigned N) {
  if (f.is_zero()) throw Error(ErrorCode::Precondition, "branches of the zero polynomial");
  if (center.size() != f.ring()->nvars()) throw Error(ErrorCode::Arity, "center has wrong length");
  if (!Field::is_zero(f.evaluate(center))) throw Error(ErrorCode::Precondition, "center is not on the curve");
  if (N < 2) throw Error(ErrorCode::Precondition, "truncation order must be at least 2");
  auto branches = compute(f, center, N);
  auto doubled = compute(f, center, 2 * N);
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const Univariate& a = branches[i].series;
    const Univariate& b = doubled[i].series;
    bool same = branches[i].tangent == doubled[i].tangent;
    for (std::size_t k = 0; k < a.size() && same; ++k) same = k < b.size() && a[k] == b[k];
    branches[i].stable = same;
  }
  return branches;
}

std::string_view dim0_verdict_name(Dim0Verdict v) noexcept {
  switch (v) {
    case Dim0Verdict::Yes: return "YES";
    case Dim0Verdict::No: return "NO";
    case Dim0Verdict::Unstable: return "UNSTABLE";
  }
  return "UNSTABLE";
}

namespace {

struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

void monomials_of_degree(std::size_t nvars, unsigned degree, std::vector<Monomial>& out) {
  std::vector<std::uint32_t> exps(nvars, 0);
  auto visit = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      exps[i] = left;
      out.emplace_back(std::span<const std::uint32_t>(exps));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (nvars == 0) return;
  visit(visit, 0, degree);
}

Dim0Verdict verdict_up_to(const std::vector<std::size_t>& hs, unsigned K) {
  if (hs[1] == 0) return Dim0Verdict::No;
  for (unsigned k = 1; k < K; ++k) {
    if (hs[k] == hs[k + 1]) return Dim0Verdict::Yes;
  }
  for (unsigned k = 0; k < K; ++k) {
    if (hs[k + 1] <= hs[k]) return Dim0Verdict::Unstable;
  }
  for (unsigned k = K / 2; k + 1 < K; ++k) {
    if (hs[k + 2] - hs[k + 1] < hs[k + 1] - hs[k]) return Dim0Verdict::Unstable;
  }
  return Dim0Verdict::No;
}

}  // namespace

Dim0Detail branch_dim0_test(const BranchDatum& branch, const IdealHandle& J, unsigned N) {
  const Ring& ring = J.ring();
  if (!same_ring(ring, branch.curve.ring())) throw Error(ErrorCode::RingMismatch, "branch in another ring");
  const unsigned K = 2 * N;
  Univariate series = branch.series;
  if (branch.parameter && series.size() < K) {
    for (const BranchDatum& b : plane_branches(branch.curve, branch.center, K)) {
      if (b.tangent == branch.tangent) series = b.series;
    }
  }
  const std::size_t n = ring->nvars();
  std::vector<std::string> names;
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == branch.solved) continue;
    index[i] = static_cast<int>(names.size());
    names.push_back(ring->variables()[i]);
  }
  Ring B = make_ring(ring->field(), names);
  const std::size_t r = names.size();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) {
    Poly shift = Poly::constant(B, branch.center[i]);
    if (i != branch.solved) {
      images.push_back(Poly::variable(B, static_cast<std::size_t>(index[i])) + shift);
      continue;
    }
    std::vector<Term> terms;
    if (branch.parameter) {
      std::size_t p = static_cast<std::size_t>(index[*branch.parameter]);
      for (std::size_t k = 0; k < series.size() && k < K; ++k) {
        terms.push_back(Term{Monomial::variable(p, static_cast<std::uint32_t>(k)), series[k]});
      }
    }
    images.push_back(Poly::from_terms(B, std::move(terms)) + shift);
  }
  std::vector<Poly> substituted;
  for (const Poly& g : J.generators()) substituted.push_back(g.substitute(images).truncated(K));

  std::vector<Monomial> columns;
  std::vector<unsigned> column_degree;
  for (unsigned k = 0; k < K && r > 0; ++k) {
    monomials_of_degree(r, k, columns);
    column_degree.resize(columns.size(), k);
  }
  std::map<Monomial, std::size_t, MonomialKeyLess> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  // Rows m * g mod n^K; with columns in ascending degree, pivots of degree < k
  // count the rank of the image of the ideal modulo n^k.
  const Field& field = ring->field();
  std::vector<std::vector<Scalar>> pivot_rows(columns.size());
  std::vector<bool> has_pivot(columns.size(), false);
  auto insert = [&](std::vector<Scalar> row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (Field::is_zero(row[c])) continue;
      if (!has_pivot[c]) {
        Scalar inv = field.inv(row[c]);
        for (std::size_t j = c; j < row.size(); ++j) row[j] = field.mul(row[j], inv);
        pivot_rows[c] = std::move(row);
        has_pivot[c] = true;
        return;
      }
      Scalar factor = row[c];
      const auto& p = pivot_rows[c];
      for (std::size_t j = c; j < row.size(); ++j) {
        if (!Field::is_zero(p[j])) row[j] = field.sub(row[j], field.mul(factor, p[j]));
      }
    }
  };
  for (const Poly& g : substituted) {
    if (g.is_zero()) continue;
    const int lowest = g.order();
    for (std::size_t mc = 0; mc < columns.size(); ++mc) {
      if (column_degree[mc] + static_cast<unsigned>(lowest) >= K) break;
      std::vector<Scalar> row(columns.size(), Scalar(0));
      bool any = false;
      for (const Term& t : g.terms()) {
        Monomial prod = columns[mc] * t.monomial;
        if (prod.degree() >= K) continue;
        row[column_of.at(prod)] = t.coeff;
        any = true;
      }
      if (any) insert(std::move(row));
    }
  }

  Dim0Detail detail;
  detail.truncation = N;
  detail.hilbert_samuel.assign(K + 1, 0);
  std::size_t standard = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (!has_pivot[c]) ++standard;
    if (c + 1 == columns.size() || column_degree[c + 1] != column_degree[c]) {
      detail.hilbert_samuel[column_degree[c] + 1] = standard;
    }
  }
  if (r == 0) {
    bool vanishes = std::all_of(substituted.begin(), substituted.end(), [](const Poly& g) { return g.is_zero(); });
    for (unsigned k = 1; k <= K; ++k) detail.hilbert_samuel[k] = vanishes ? 1 : 0;
  }
  Dim0Verdict at_n = verdict_up_to(detail.hilbert_samuel, N);
  Dim0Verdict at_2n = verdict_up_to(detail.hilbert_samuel, K);
  detail.verdict = at_n == at_2n ? at_n : Dim0Verdict::Unstable;
  return detail;
}

}  // namespace toploc
