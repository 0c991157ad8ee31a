#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toploc/analytic/analytic_cert.hpp"
#include "toploc/toplocal/tribool.hpp"
#include "toploc/variety/module.hpp"

namespace toploc {

struct Context {
  HintTable hints;
  unsigned truncation = 8;
};

/// A top-dimensional prime of the completion at m lying over p: the unique
/// one ("UNIQUE") or the branch with the given tangent.
struct AnalyticPrimeTag {
  PrimeCert m;
  PrimeCert p;
  std::string branch;

  std::string key() const;
};
bool tag_less(const AnalyticPrimeTag& a, const AnalyticPrimeTag& b);
bool same_tag(const AnalyticPrimeTag& a, const AnalyticPrimeTag& b);

inline constexpr const char* kUniqueBranch = "UNIQUE";

/// A tag together with whether it meets V(a) only at the closed point,
/// i.e. survives in the attached primes of the top local cohomology.
struct TagVerdict {
  AnalyticPrimeTag tag;
  TriBool survives;
  std::optional<BranchDatum> branch;
  std::optional<Dim0Detail> detail;
};

/// cd(a R_m, R_m/p R_m) = dim R/p, decided at one maximal ideal.
struct LocalCd {
  PrimeCert m;
  PrimeCert p;
  TriBool value;
  /// isolated-point, generator-count, unique-analytic-prime, branch-test, unknown-certificate
  std::string route;
  bool isolated = false;
  IrreducibilityCert cert;
  /// False when the primes of the completion over p are not known.
  bool tags_known = true;
  std::vector<TagVerdict> tags;
};
LocalCd cd_top_at(const IdealHandle& a, const PrimeCert& p, const PrimeCert& m, const Context& ctx);

/// Maximal ideals where cd(a, R/p) = dim R/p can occur: isolated points of
/// V(a + p) and points of V(a + p) where p is singular.
struct Candidates {
  std::vector<PrimeCert> points;
  bool complete = true;
  std::string note;
};
Candidates cd_candidates(const IdealHandle& a, const PrimeCert& p, const std::optional<PrimeCert>& local_at,
                         const Context& ctx);

/// cd(a, R/p) = dim R/p over all candidate maximal ideals.
struct CdResult {
  PrimeCert p;
  TriBool value;
  std::string route;
  std::vector<LocalCd> local;
  bool candidates_complete = true;
  std::string note;
};
CdResult cd_top(const IdealHandle& a, const PrimeCert& p, const Context& ctx,
                const std::optional<PrimeCert>& local_at = std::nullopt);

/// Attached primes of H^d_a(M): members of Assh M with cd(a, R/p) = d.
struct AttReport {
  AsshResult assh;
  std::vector<CdResult> per_prime;
  std::vector<PrimeCert> att;
  /// Assh members whose test came back UNKNOWN.
  std::vector<PrimeCert> possible;
  bool conditional = false;
};
AttReport att_top(const IdealHandle& a, const ModuleSpec& M, const Context& ctx);

/// Support of H^d_a(M): maximal ideals with cd_top_at YES for some p in Assh M.
struct SuppReport {
  std::vector<PrimeCert> support;
  std::vector<PrimeCert> possible;
  bool complete = true;
  bool conditional = false;
};
SuppReport supp_top(const AttReport& att);
SuppReport supp_top(const IdealHandle& a, const ModuleSpec& M, const Context& ctx);

struct VanishReport {
  TriBool value;
  std::string route;
  std::optional<LocalCd> witness;
  AttReport att;
};
VanishReport vanishes_top(const IdealHandle& a, const ModuleSpec& M, const Context& ctx);

/// Attached primes through the semilocal criterion: p in Assh M with
/// p ⊆ m_i and ht(m_i/p) = d for some i. No completion data is used.
struct SemilocalReport {
  AsshResult assh;
  IdealHandle a;
  std::vector<PrimeCert> att;
  std::vector<std::pair<PrimeCert, PrimeCert>> witnesses;  // (p, m_i)
};
SemilocalReport att_top_semilocal(const std::vector<PrimeCert>& mlist, const ModuleSpec& M, const Context& ctx);

/// Tags surviving in the completion.
struct CompletionReport {
  std::vector<AnalyticPrimeTag> tags;
  std::vector<AnalyticPrimeTag> unknown;
  bool incomplete = false;
  bool conditional = false;
};
CompletionReport att_top_completion(const AttReport& att);
CompletionReport att_top_completion(const IdealHandle& a, const ModuleSpec& M, const Context& ctx);

/// Support radical, full tag set over the support, and its split into
/// killed and surviving tags.
struct StructureReport {
  std::vector<PrimeCert> support;
  IdealHandle support_radical;
  std::vector<TagVerdict> tags;
  std::vector<AnalyticPrimeTag> killed;
  std::vector<AnalyticPrimeTag> surviving;
  std::vector<AnalyticPrimeTag> undecided;
  bool incomplete = false;
  bool conditional = false;
};
StructureReport structure_report(const IdealHandle& a, const ModuleSpec& M, const Context& ctx);

/// All tags (m, p, branch) with m in `support`, p in Assh M inside m.
struct TagUniverse {
  std::vector<AnalyticPrimeTag> tags;
  bool complete = true;
};
TagUniverse tag_universe(const std::vector<PrimeCert>& support, const AsshResult& assh, const Context& ctx);

/// Lower bound for Att H^c_a(M) in the monomial world: associated primes p
/// of b with dim R/p = c = cd of the image of a in R/p.
struct LowerBoundReport {
  std::vector<PrimeCert> primes;
  /// When c = dim M: whether the bound sits inside att_top.
  std::optional<TriBool> contained_in_att;
};
LowerBoundReport lower_bound_att(const IdealHandle& a, const ModuleSpec& M, int c, const Context& ctx);

}  // namespace toploc
