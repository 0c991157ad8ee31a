#pragma once

#include <string>
#include <vector>

#include "toploc/analytic/branches.hpp"
#include "toploc/variety/prime.hpp"

namespace toploc {

enum class CertVerdict { Unique, Branches, Unknown };
enum class CertReason { RegularPoint, CoordinateQuotient, PlaneBranchAnalysis, None };

std::string_view cert_verdict_name(CertVerdict v) noexcept;
std::string_view cert_reason_name(CertReason r) noexcept;

/// What is known about the primes of the completion of R_m lying minimally over p.
struct IrreducibilityCert {
  CertVerdict verdict = CertVerdict::Unknown;
  CertReason reason = CertReason::None;
  std::vector<BranchDatum> branches;
  std::string note;
};

/// c x c minors of the Jacobian matrix of the generators of p; nullopt when
/// there are too many to enumerate.
std::optional<std::vector<Poly>> jacobian_minors(const IdealHandle& p, int c);

/// Jacobian criterion: some height(p)-minor lies outside m.
bool is_regular_at(const PrimeCert& p, const PrimeCert& m);

/// Coordinate or linear p and regular points give UNIQUE; a principal p in
/// two variables singular at a rational m gives BRANCHES through plane branch
/// analysis; anything else is UNKNOWN.
IrreducibilityCert analytic_cert(const PrimeCert& p, const PrimeCert& m, unsigned truncation);

}  // namespace toploc
