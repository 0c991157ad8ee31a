#include "toploc/analytic/analytic_cert.hpp"

#include <bit>

#include "toploc/error.hpp"
#include "toploc/groebner/ideal_ops.hpp"

namespace toploc {

std::string_view cert_verdict_name(CertVerdict v) noexcept {
  switch (v) {
    case CertVerdict::Unique: return "UNIQUE";
    case CertVerdict::Branches: return "BRANCHES";
    case CertVerdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view cert_reason_name(CertReason r) noexcept {
  switch (r) {
    case CertReason::RegularPoint: return "regular-point";
    case CertReason::CoordinateQuotient: return "coordinate-quotient";
    case CertReason::PlaneBranchAnalysis: return "plane-branch-analysis";
    case CertReason::None: return "none";
  }
  return "none";
}

namespace {

Poly determinant(const std::vector<std::vector<Poly>>& m, const Ring& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(ring, Scalar(1));
  if (n == 1) return m[0][0];
  Poly det(ring);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      sub.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(sub, ring);
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
  }
  return out;
}

}  // namespace

std::optional<std::vector<Poly>> jacobian_minors(const IdealHandle& p, int c) {
  const Ring& ring = p.ring();
  if (c <= 0) return std::vector<Poly>{Poly::constant(ring, Scalar(1))};
  const auto& gens = p.generators();
  const std::size_t n = ring->nvars();
  const std::size_t k = static_cast<std::size_t>(c);
  if (gens.size() < k || n < k || gens.size() > 16) return std::vector<Poly>{};
  auto rows = subsets(gens.size(), k);
  auto cols = subsets(n, k);
  if (rows.size() * cols.size() > 5000) return std::nullopt;
  std::vector<std::vector<Poly>> jac;
  for (const Poly& g : gens) {
    std::vector<Poly> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(g.derivative(j));
    jac.push_back(std::move(row));
  }
  std::vector<Poly> minors;
  for (std::uint32_t rs : rows) {
    for (std::uint32_t cs : cols) {
      std::vector<std::vector<Poly>> sub;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!(rs & (1u << i))) continue;
        std::vector<Poly> row;
        for (std::size_t j = 0; j < n; ++j) {
          if (cs & (1u << j)) row.push_back(jac[i][j]);
        }
        sub.push_back(std::move(row));
      }
      Poly d = determinant(sub, ring);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  }
  return minors;
}

bool is_regular_at(const PrimeCert& p, const PrimeCert& m) {
  if (p.kind() == CertKind::Coordinate || p.kind() == CertKind::Linear || p.kind() == CertKind::Graph) return true;
  auto minors = jacobian_minors(p.ideal(), p.height());
  if (!minors) return false;
  for (const Poly& d : *minors) {
    if (!gb::contains(m.ideal(), d)) return true;
  }
  return false;
}

IrreducibilityCert analytic_cert(const PrimeCert& p, const PrimeCert& m, unsigned truncation) {
  if (!gb::contains(m.ideal(), p.ideal())) {
    throw Error(ErrorCode::Precondition, p.to_string() + " is not contained in " + m.to_string());
  }
  IrreducibilityCert cert;
  if (p.kind() == CertKind::Coordinate || p.kind() == CertKind::Linear) {
    cert.verdict = CertVerdict::Unique;
    cert.reason = CertReason::CoordinateQuotient;
    return cert;
  }
  if (is_regular_at(p, m)) {
    cert.verdict = CertVerdict::Unique;
    cert.reason = CertReason::RegularPoint;
    return cert;
  }
  if (!m.point()) {
    cert.note = "singular at the non-rational point " + m.to_string();
    return cert;
  }
  const auto& basis = p.ideal().groebner_basis();
  if (basis.size() != 1 || std::popcount(basis.front().variable_mask()) > 2) {
    cert.note = "singular point outside the plane-curve cylinder case";
    return cert;
  }
  try {
    cert.branches = plane_branches(basis.front(), *m.point(), truncation);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedSingularity && e.code() != ErrorCode::Unsupported) throw;
    cert.note = e.what();
    return cert;
  }
  cert.reason = CertReason::PlaneBranchAnalysis;
  cert.verdict = cert.branches.size() >= 2 ? CertVerdict::Branches : CertVerdict::Unique;
  if (cert.verdict == CertVerdict::Unique) cert.branches.clear();
  return cert;
}

}  // namespace toploc
