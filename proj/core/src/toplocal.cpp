#include "toploc/toplocal/toplocal.hpp"

#include <algorithm>
#include <map>

#include "toploc/error.hpp"
#include "toploc/groebner/ideal_ops.hpp"
#include "toploc/sr/hochster.hpp"
#include "toploc/variety/points.hpp"

namespace toploc {

namespace {

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& s : parts) out += s + ",";
  return out;
}

}  // namespace

std::string AnalyticPrimeTag::key() const { return joined(m.key()) + "|" + joined(p.key()) + "|" + branch; }

bool tag_less(const AnalyticPrimeTag& a, const AnalyticPrimeTag& b) {
  if (!same_prime(a.m, b.m)) return a.m.key() < b.m.key();
  if (!same_prime(a.p, b.p)) return prime_less(a.p, b.p);
  return a.branch < b.branch;
}

bool same_tag(const AnalyticPrimeTag& a, const AnalyticPrimeTag& b) {
  return same_prime(a.m, b.m) && same_prime(a.p, b.p) && a.branch == b.branch;
}

namespace {

/// Generators of a that survive in R/p; cd(a, R/p) never exceeds this count.
std::size_t generators_outside(const IdealHandle& a, const PrimeCert& p) {
  auto count = [&](const std::vector<Poly>& gens) {
    return static_cast<std::size_t>(
        std::count_if(gens.begin(), gens.end(), [&](const Poly& g) { return !gb::contains(p.ideal(), g); }));
  };
  return std::min(count(a.generators()), count(a.groebner_basis()));
}

void add_unique(std::vector<PrimeCert>& list, const PrimeCert& p) {
  for (const PrimeCert& q : list) {
    if (same_prime(q, p)) return;
  }
  list.push_back(p);
}

void fill_tags(LocalCd& out, TriBool verdict) {
  switch (out.cert.verdict) {
    case CertVerdict::Unique:
      out.tags.push_back(TagVerdict{{out.m, out.p, kUniqueBranch}, verdict, std::nullopt, std::nullopt});
      break;
    case CertVerdict::Branches:
      for (const BranchDatum& b : out.cert.branches) {
        out.tags.push_back(TagVerdict{{out.m, out.p, b.id()}, verdict, b, std::nullopt});
      }
      break;
    case CertVerdict::Unknown:
      out.tags_known = false;
      break;
  }
}

}  // namespace

LocalCd cd_top_at(const IdealHandle& a, const PrimeCert& p, const PrimeCert& m, const Context& ctx) {
  if (!m.is_maximal()) throw Error(ErrorCode::Precondition, m.to_string() + " is not maximal");
  if (!gb::contains(m.ideal(), p.ideal())) {
    throw Error(ErrorCode::Precondition, p.to_string() + " is not contained in " + m.to_string());
  }
  if (!gb::contains(m.ideal(), a)) {
    throw Error(ErrorCode::Precondition, a.to_string() + " is not contained in " + m.to_string());
  }
  const bool cond = p.conditional() || m.conditional();
  LocalCd out{m, p, TriBool::unknown(cond), "", false, {}, true, {}};
  IdealHandle J = gb::sum(a, p.ideal());
  out.isolated = is_isolated_point(J, m.ideal());
  out.cert = analytic_cert(p, m, ctx.truncation);
  if (out.isolated) {
    out.value = TriBool::yes(cond);
    out.route = "isolated-point";
    fill_tags(out, out.value);
    return out;
  }
  if (generators_outside(a, p) < static_cast<std::size_t>(p.dim())) {
    out.value = TriBool::no(cond);
    out.route = "generator-count";
    fill_tags(out, out.value);
    return out;
  }
  switch (out.cert.verdict) {
    case CertVerdict::Unique:
      out.value = TriBool::no(cond);
      out.route = "unique-analytic-prime";
      fill_tags(out, out.value);
      break;
    case CertVerdict::Branches: {
      out.route = "branch-test";
      TriBool any = TriBool::no(cond);
      for (const BranchDatum& b : out.cert.branches) {
        Dim0Detail detail = branch_dim0_test(b, J, ctx.truncation);
        TriBool survives = detail.verdict == Dim0Verdict::Yes  ? TriBool::yes(cond)
                           : detail.verdict == Dim0Verdict::No ? TriBool::no(cond)
                                                               : TriBool::unknown(cond);
        any = tri_or(any, survives);
        out.tags.push_back(TagVerdict{{m, p, b.id()}, survives, b, detail});
      }
      out.value = any;
      break;
    }
    case CertVerdict::Unknown:
      out.value = TriBool::unknown(cond);
      out.route = "unknown-certificate";
      out.tags_known = false;
      break;
  }
  return out;
}

Candidates cd_candidates(const IdealHandle& a, const PrimeCert& p, const std::optional<PrimeCert>& local_at,
                         const Context& ctx) {
  Candidates out;
  IdealHandle J = gb::sum(a, p.ideal());
  if (local_at) {
    if (gb::contains(local_at->ideal(), J)) out.points.push_back(*local_at);
    return out;
  }
  IsolatedPoints iso = isolated_zero_dim_primes(J, ctx.hints);
  out.points = iso.primes;
  if (!iso.complete) {
    out.complete = false;
    out.note = "isolated points of V(" + J.to_string() + ") not fully determined";
  }
  const bool smooth = p.kind() == CertKind::Coordinate || p.kind() == CertKind::Linear ||
                      p.kind() == CertKind::Graph || p.height() == 0;
  if (!smooth) {
    auto minors = jacobian_minors(p.ideal(), p.height());
    if (!minors) {
      out.complete = false;
      out.note = "Jacobian of " + p.to_string() + " too large";
    } else {
      std::vector<Poly> gens = J.generators();
      gens.insert(gens.end(), minors->begin(), minors->end());
      IdealHandle sigma(J.ring(), std::move(gens));
      if (!sigma.is_unit()) {
        if (gb::dimension(sigma) == 0) {
          IsolatedPoints sing = isolated_zero_dim_primes(sigma, ctx.hints);
          for (const PrimeCert& m : sing.primes) add_unique(out.points, m);
          if (!sing.complete) {
            out.complete = false;
            out.note = "singular points of " + p.to_string() + " on V(a) not all rational";
          }
        } else {
          out.complete = false;
          out.note = p.to_string() + " is singular along a positive-dimensional part of V(a)";
        }
      }
    }
  }
  sort_primes(out.points);
  return out;
}

CdResult cd_top(const IdealHandle& a, const PrimeCert& p, const Context& ctx, const std::optional<PrimeCert>& local_at) {
  CdResult out{p, TriBool::unknown(p.conditional()), "", {}, true, ""};
  if (generators_outside(a, p) < static_cast<std::size_t>(p.dim())) {
    out.value = TriBool::no(p.conditional());
    out.route = "generator-count";
    return out;
  }
  if (local_at && !gb::contains(local_at->ideal(), a)) {
    out.value = TriBool::no(p.conditional());
    out.route = "ideal-not-in-localization";
    return out;
  }
  Candidates cands = cd_candidates(a, p, local_at, ctx);
  out.candidates_complete = cands.complete;
  out.note = cands.note;
  TriBool agg = TriBool::no(p.conditional());
  for (const PrimeCert& m : cands.points) {
    out.local.push_back(cd_top_at(a, p, m, ctx));
    agg = tri_or(agg, out.local.back().value);
  }
  if (!cands.complete && !agg.is_yes()) agg = TriBool::unknown(agg.conditional);
  agg.conditional = agg.conditional || p.conditional();
  out.value = agg;
  out.route = local_at ? "local-cd-at-localization-point" : "local-cd-at-candidate-points";
  return out;
}

AttReport att_top(const IdealHandle& a, const ModuleSpec& M, const Context& ctx) {
  if (!same_ring(a.ring(), M.ring())) throw Error(ErrorCode::RingMismatch, "ideal and module in different rings");
  AttReport out;
  out.assh = assh(M, ctx.hints);
  out.conditional = out.assh.conditional;
  for (const PrimeCert& p : out.assh.primes) {
    CdResult r = cd_top(a, p, ctx, M.local_at());
    if (r.value.is_yes()) out.att.push_back(p);
    if (r.value.is_unknown()) out.possible.push_back(p);
    out.conditional = out.conditional || r.value.conditional;
    out.per_prime.push_back(std::move(r));
  }
  return out;
}

SuppReport supp_top(const AttReport& att) {
  SuppReport out;
  out.conditional = att.conditional;
  for (const CdResult& r : att.per_prime) {
    out.complete = out.complete && r.candidates_complete;
    for (const LocalCd& l : r.local) {
      if (l.value.is_yes()) add_unique(out.support, l.m);
      if (l.value.is_unknown()) add_unique(out.possible, l.m);
    }
  }
  std::erase_if(out.possible, [&](const PrimeCert& m) {
    return std::any_of(out.support.begin(), out.support.end(), [&](const PrimeCert& s) { return same_prime(s, m); });
  });
  out.complete = out.complete && out.possible.empty();
  sort_primes(out.support);
  sort_primes(out.possible);
  return out;
}

SuppReport supp_top(const IdealHandle& a, const ModuleSpec& M, const Context& ctx) {
  return supp_top(att_top(a, M, ctx));
}

VanishReport vanishes_top(const IdealHandle& a, const ModuleSpec& M, const Context& ctx) {
  VanishReport out;
  out.att = att_top(a, M, ctx);
  out.route = "cd-below-dim-for-all-assh";
  if (!out.att.att.empty()) {
    for (const CdResult& r : out.att.per_prime) {
      if (!r.value.is_yes()) continue;
      out.value = TriBool::no(r.value.conditional);
      for (const LocalCd& l : r.local) {
        if (l.value.is_yes()) {
          out.witness = l;
          break;
        }
      }
      break;
    }
  } else if (out.att.possible.empty()) {
    out.value = TriBool::yes(out.att.conditional);
  } else {
    out.value = TriBool::unknown(out.att.conditional);
  }
  return out;
}

SemilocalReport att_top_semilocal(const std::vector<PrimeCert>& mlist, const ModuleSpec& M, const Context& ctx) {
  if (mlist.empty()) throw Error(ErrorCode::Precondition, "semilocal_att needs at least one maximal ideal");
  std::vector<IdealHandle> ideals;
  for (const PrimeCert& m : mlist) {
    if (!m.is_maximal()) throw Error(ErrorCode::Precondition, m.to_string() + " is not maximal");
    if (!same_ring(m.ring(), M.ring())) throw Error(ErrorCode::RingMismatch, "maximal ideal in another ring");
    ideals.push_back(m.ideal());
  }
  SemilocalReport out{assh(M, ctx.hints), gb::intersect_all(ideals), {}, {}};
  for (const PrimeCert& p : out.assh.primes) {
    for (const PrimeCert& m : mlist) {
      if (M.is_local() && !same_prime(m, *M.local_at())) continue;
      if (!gb::contains(m.ideal(), p.ideal())) continue;
      // In an affine domain every maximal ideal has height dim R/p.
      const int height = p.dim() - m.dim();
      if (height != out.assh.d) continue;
      out.att.push_back(p);
      out.witnesses.emplace_back(p, m);
      break;
    }
  }
  return out;
}

CompletionReport att_top_completion(const AttReport& att) {
  CompletionReport out;
  out.conditional = att.conditional;
  for (const CdResult& r : att.per_prime) {
    out.incomplete = out.incomplete || !r.candidates_complete;
    for (const LocalCd& l : r.local) {
      if (l.value.is_no()) continue;
      if (!l.tags_known) out.incomplete = true;
      for (const TagVerdict& t : l.tags) {
        if (t.survives.is_yes()) out.tags.push_back(t.tag);
        if (t.survives.is_unknown()) out.unknown.push_back(t.tag);
      }
    }
  }
  out.incomplete = out.incomplete || !out.unknown.empty();
  std::sort(out.tags.begin(), out.tags.end(), tag_less);
  std::sort(out.unknown.begin(), out.unknown.end(), tag_less);
  return out;
}

CompletionReport att_top_completion(const IdealHandle& a, const ModuleSpec& M, const Context& ctx) {
  return att_top_completion(att_top(a, M, ctx));
}

StructureReport structure_report(const IdealHandle& a, const ModuleSpec& M, const Context& ctx) {
  AttReport att = att_top(a, M, ctx);
  SuppReport supp = supp_top(att);
  StructureReport out{supp.support, IdealHandle::unit(M.ring()), {}, {}, {}, {}, !supp.complete, att.conditional};
  if (!supp.support.empty()) {
    std::vector<IdealHandle> ideals;
    for (const PrimeCert& m : supp.support) ideals.push_back(m.ideal());
    out.support_radical = gb::intersect_all(ideals);
  }
  auto cached = [&](const PrimeCert& m, const PrimeCert& p) -> std::optional<LocalCd> {
    for (const CdResult& r : att.per_prime) {
      if (!same_prime(r.p, p)) continue;
      for (const LocalCd& l : r.local) {
        if (same_prime(l.m, m)) return l;
      }
    }
    return std::nullopt;
  };
  for (const PrimeCert& m : supp.support) {
    for (const PrimeCert& p : att.assh.primes) {
      if (!gb::contains(m.ideal(), p.ideal())) continue;
      LocalCd local = cached(m, p).value_or(cd_top_at(a, p, m, ctx));
      if (!local.tags_known) out.incomplete = true;
      for (const TagVerdict& t : local.tags) {
        out.tags.push_back(t);
        if (t.survives.is_yes()) out.surviving.push_back(t.tag);
        else if (t.survives.is_no()) out.killed.push_back(t.tag);
        else out.undecided.push_back(t.tag);
      }
    }
  }
  out.incomplete = out.incomplete || !out.undecided.empty();
  std::sort(out.surviving.begin(), out.surviving.end(), tag_less);
  std::sort(out.killed.begin(), out.killed.end(), tag_less);
  std::sort(out.undecided.begin(), out.undecided.end(), tag_less);
  return out;
}

TagUniverse tag_universe(const std::vector<PrimeCert>& support, const AsshResult& assh, const Context& ctx) {
  TagUniverse out;
  for (const PrimeCert& m : support) {
    for (const PrimeCert& p : assh.primes) {
      if (!gb::contains(m.ideal(), p.ideal())) continue;
      IrreducibilityCert cert = analytic_cert(p, m, ctx.truncation);
      if (cert.verdict == CertVerdict::Unknown) {
        out.complete = false;
      } else if (cert.verdict == CertVerdict::Unique) {
        out.tags.push_back(AnalyticPrimeTag{m, p, kUniqueBranch});
      } else {
        for (const BranchDatum& b : cert.branches) out.tags.push_back(AnalyticPrimeTag{m, p, b.id()});
      }
    }
  }
  std::sort(out.tags.begin(), out.tags.end(), tag_less);
  return out;
}

LowerBoundReport lower_bound_att(const IdealHandle& a, const ModuleSpec& M, int c, const Context& ctx) {
  if (!a.is_monomial() || !M.ideal().is_monomial()) {
    throw Error(ErrorCode::Unsupported, "lower_bound needs monomial ideals");
  }
  if (M.is_local()) throw Error(ErrorCode::Unsupported, "lower_bound is computed for global monomial modules only");
  const Ring& ring = M.ring();
  const std::size_t n = ring->nvars();
  LowerBoundReport out;
  for (const PrimeCert& p : monomial_ass(M.ideal())) {
    if (p.dim() != c) continue;
    std::uint32_t killed = 0;
    for (const Poly& g : p.ideal().generators()) killed |= g.variable_mask();
    std::vector<std::string> names;
    std::vector<int> map(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (killed & (1u << i)) continue;
      map[i] = static_cast<int>(names.size());
      names.push_back(ring->variables()[i]);
    }
    std::vector<Poly> images;
    for (const Poly& g : a.generators()) {
      if (!(g.variable_mask() & killed)) images.push_back(g);
    }
    int cd;
    if (images.empty()) {
      cd = 0;
    } else if (std::any_of(images.begin(), images.end(), [](const Poly& g) { return g.is_constant(); })) {
      cd = -1;
    } else {
      Ring quotient = make_ring(ring->field(), names);
      std::vector<Poly> mapped;
      for (const Poly& g : images) mapped.push_back(g.map_to(quotient, map));
      cd = cd_monomial(IdealHandle(quotient, std::move(mapped)));
    }
    if (cd == c) out.primes.push_back(p);
  }
  AsshResult top = assh(M, ctx.hints);
  if (c == top.d) {
    AttReport att = att_top(a, M, ctx);
    TriBool inside = TriBool::yes();
    for (const PrimeCert& p : out.primes) {
      bool found = std::any_of(att.att.begin(), att.att.end(), [&](const PrimeCert& q) { return same_prime(p, q); });
      bool maybe = std::any_of(att.possible.begin(), att.possible.end(), [&](const PrimeCert& q) { return same_prime(p, q); });
      inside = tri_and(inside, found ? TriBool::yes() : (maybe ? TriBool::unknown() : TriBool::no()));
    }
    out.contained_in_att = inside;
  }
  sort_primes(out.primes);
  return out;
}

}  // namespace toploc
