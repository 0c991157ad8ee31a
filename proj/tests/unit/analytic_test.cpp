#include <gtest/gtest.h>

#include "support/testing.hpp"
#include "toploc/analytic/analytic_cert.hpp"
#include "toploc/analytic/branches.hpp"
#include "toploc/analytic/series.hpp"

namespace toploc {
namespace {

using testing::I;
using testing::P;

/// f(branch) as a polynomial in the branch parameter t, truncated below `bound`.
Poly substitute_branch(const BranchDatum& b, unsigned bound) {
  const Ring& r = b.curve.ring();
  Ring tr = testing::qq({"t"});
  if (r->field().is_prime_field()) tr = testing::fp(r->field().characteristic(), {"t"});
  std::vector<Poly> images;
  for (std::size_t i = 0; i < r->nvars(); ++i) images.push_back(Poly::constant(tr, b.center[i]));
  Poly t = Poly::variable(tr, 0);
  Poly w = Poly::constant(tr, b.center[b.solved]);
  Poly tk = Poly::constant(tr, Scalar(1));
  for (const Scalar& c : b.series) {
    w += tk.scaled(c);
    tk = tk * t;
  }
  images[b.solved] = w;
  if (b.parameter) images[*b.parameter] = t + Poly::constant(tr, b.center[*b.parameter]);
  return b.curve.substitute(images).truncated(bound);
}

TEST(Series, SquareRootOfOnePlusX) {
  Field q = Field::rationals();
  Univariate s = sqrt_one_plus(q, 6);
  Univariate sq = series_mul(q, s, s, 6);
  Univariate expected{Scalar(1), Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  EXPECT_EQ(sq, expected);
  EXPECT_EQ(s[2], Scalar(-1, 8));
  EXPECT_EQ(s[3], Scalar(1, 16));
}

TEST(Branches, NodeHasTwoBranches) {
  Ring r = testing::qq({"x", "y"});
  Poly f = P(r, "y^2 - x^2 - x^3");
  auto bs = plane_branches(f, {Scalar(0), Scalar(0)}, 8);
  ASSERT_EQ(bs.size(), 2u);
  for (const BranchDatum& b : bs) {
    EXPECT_TRUE(b.stable);
    EXPECT_TRUE(substitute_branch(b, 8).is_zero()) << b.to_string();
    ASSERT_GE(b.series.size(), 4u);
    Scalar sign = b.series[1];
    EXPECT_EQ(abs(sign), Scalar(1));
    // y = ±x (1 + x/2 - x^2/8 + ...)
    EXPECT_EQ(b.series[2], sign * Scalar(1, 2));
    EXPECT_EQ(b.series[3], sign * Scalar(-1, 8));
  }
  EXPECT_NE(bs[0].id(), bs[1].id());
}

TEST(Branches, SmoothPointHasOneBranch) {
  Ring r = testing::qq({"x", "y"});
  auto bs = plane_branches(P(r, "y - x^2"), {Scalar(0), Scalar(0)}, 8);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_TRUE(substitute_branch(bs[0], 8).is_zero());
  Univariate expected(8, Scalar(0));
  expected[2] = Scalar(1);
  bs[0].series.resize(8, Scalar(0));
  EXPECT_EQ(bs[0].series, expected);
}

TEST(Branches, CoordinateCross) {
  Ring r = testing::qq({"x", "y"});
  auto bs = plane_branches(P(r, "x*y"), {Scalar(0), Scalar(0)}, 8);
  ASSERT_EQ(bs.size(), 2u);
  for (const BranchDatum& b : bs) EXPECT_TRUE(substitute_branch(b, 8).is_zero());
  std::vector<std::size_t> solved{bs[0].solved, bs[1].solved};
  std::sort(solved.begin(), solved.end());
  EXPECT_EQ(solved, (std::vector<std::size_t>{0, 1}));
}

TEST(Branches, CuspIsUnsupported) {
  Ring r = testing::qq({"x", "y"});
  try {
    plane_branches(P(r, "y^2 - x^3"), {Scalar(0), Scalar(0)}, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedSingularity);
  }
}

TEST(Branches, ShiftedCenter) {
  Ring r = testing::qq({"x", "y"});
  Poly f = P(r, "(y - 2)^2 - (x + 1)^2 - (x + 1)^3");
  auto bs = plane_branches(f, {Scalar(-1), Scalar(2)}, 10);
  ASSERT_EQ(bs.size(), 2u);
  for (const BranchDatum& b : bs) EXPECT_TRUE(substitute_branch(b, 10).is_zero());
}

TEST(Branches, OrderNVanishingOnRandomNodes) {
  testing::Gen g(31);
  Ring r = testing::qq({"x", "y"});
  for (int round = 0; round < 20; ++round) {
    int a = g.uniform(1, 4), b = g.uniform(-3, 3), c = g.uniform(-3, 3);
    if (b == c) continue;
    // (y - b x)(y - c x) + a x^3 + y^3: an ordinary double point with rational tangents
    Poly f = (P(r, "y") - P(r, "x").scaled(Scalar(b))) * (P(r, "y") - P(r, "x").scaled(Scalar(c))) +
             P(r, "x^3").scaled(Scalar(a)) + P(r, "y^3");
    auto bs = plane_branches(f, {Scalar(0), Scalar(0)}, 9);
    ASSERT_EQ(bs.size(), 2u);
    for (const BranchDatum& br : bs) EXPECT_TRUE(substitute_branch(br, 9).is_zero()) << f.to_string();
  }
}

TEST(Dim0, CrossBranches) {
  Ring r = testing::qq({"x", "y"});
  auto bs = plane_branches(P(r, "x*y"), {Scalar(0), Scalar(0)}, 8);
  for (const BranchDatum& b : bs) {
    // y = 0 (solved for y) meets x = 0 only at the origin; x = 0 lies inside it
    Dim0Verdict expected = b.solved == 1 ? Dim0Verdict::Yes : Dim0Verdict::No;
    EXPECT_EQ(branch_dim0_test(b, I(r, {"x"}), 8).verdict, expected);
    Dim0Verdict expected_y = b.solved == 1 ? Dim0Verdict::No : Dim0Verdict::Yes;
    EXPECT_EQ(branch_dim0_test(b, I(r, {"y"}), 8).verdict, expected_y);
  }
}

TEST(Dim0, MonotoneInTheIdeal) {
  Ring r = testing::qq({"x", "y", "z"});
  Poly f = P(r, "y^2 - x^2 - x^3");
  auto bs = plane_branches(f, {Scalar(0), Scalar(0), Scalar(0)}, 8);
  const std::vector<std::vector<std::string_view>> ideals{{"z"}, {"x"}, {"z - x"}, {"x + y - y*z"}, {"z^2"}};
  for (const BranchDatum& b : bs) {
    for (const auto& g1 : ideals) {
      for (const auto& g2 : ideals) {
        std::vector<Poly> gens{f}, gens1{f}, gens2{f};
        for (auto s : g1) {
          gens.push_back(P(r, s));
          gens1.push_back(P(r, s));
        }
        for (auto s : g2) {
          gens.push_back(P(r, s));
          gens2.push_back(P(r, s));
        }
        auto v1 = branch_dim0_test(b, IdealHandle(r, gens1), 8).verdict;
        auto v2 = branch_dim0_test(b, IdealHandle(r, gens2), 8).verdict;
        if (v1 == Dim0Verdict::Yes || v2 == Dim0Verdict::Yes) {
          EXPECT_EQ(branch_dim0_test(b, IdealHandle(r, gens), 8).verdict, Dim0Verdict::Yes);
        }
      }
    }
  }
}

TEST(Dim0, NodalSurfaceCurveSeparatesTheBranches) {
  Ring r = testing::qq({"x", "y", "z"});
  Poly f = P(r, "y^2 - x^2 - x^3");
  IdealHandle J = I(r, {"x + y - y*z", "(z - 1)^2*(x + 1) - 1", "y^2 - x^2 - x^3"});
  for (unsigned N : {8u, 16u, 32u}) {
    auto bs = plane_branches(f, {Scalar(0), Scalar(0), Scalar(0)}, N);
    ASSERT_EQ(bs.size(), 2u);
    int yes = 0, no = 0;
    for (const BranchDatum& b : bs) {
      EXPECT_TRUE(b.stable);
      Dim0Detail d = branch_dim0_test(b, J, N);
      EXPECT_EQ(d.verdict, b.id() == "-x + y" ? Dim0Verdict::Yes : Dim0Verdict::No) << b.id() << " N=" << N;
      yes += d.verdict == Dim0Verdict::Yes;
      no += d.verdict == Dim0Verdict::No;
    }
    EXPECT_EQ(yes, 1);
    EXPECT_EQ(no, 1);
  }
}

TEST(AnalyticCert, Examples) {
  Ring r = testing::qq({"x", "y"});
  auto m = *certify_prime(I(r, {"x", "y"}));
  auto zero = *certify_prime(IdealHandle::zero(r));
  IrreducibilityCert c0 = analytic_cert(zero, m, 8);
  EXPECT_EQ(c0.verdict, CertVerdict::Unique);
  EXPECT_EQ(c0.reason, CertReason::CoordinateQuotient);
  auto parabola = *certify_prime(I(r, {"y - x^2"}));
  EXPECT_EQ(parabola.kind(), CertKind::Graph);
  EXPECT_EQ(analytic_cert(parabola, m, 8).reason, CertReason::RegularPoint);
  auto node = *certify_prime(I(r, {"y^2 - x^2 - x^3"}));
  IrreducibilityCert c1 = analytic_cert(node, m, 8);
  EXPECT_EQ(c1.verdict, CertVerdict::Branches);
  EXPECT_EQ(c1.branches.size(), 2u);
  auto cusp = *certify_prime(I(r, {"y^2 - x^3"}));
  EXPECT_EQ(analytic_cert(cusp, m, 8).verdict, CertVerdict::Unknown);
  auto other = *certify_prime(I(r, {"x - 3", "y - 6"}));
  EXPECT_EQ(analytic_cert(node, other, 8).verdict, CertVerdict::Unique);
}

TEST(AnalyticCert, SmoothPointsAreUnique) {
  Ring r = testing::qq({"x", "y", "z"});
  auto surface = *certify_prime(I(r, {"z - x^2 - y^2"}));
  for (auto pt : {std::vector<std::string_view>{"x", "y", "z"}, {"x - 1", "y", "z - 1"}, {"x - 1", "y - 1", "z - 2"}}) {
    auto m = *certify_prime(I(r, {pt[0], pt[1], pt[2]}));
    EXPECT_TRUE(is_regular_at(surface, m));
    EXPECT_EQ(analytic_cert(surface, m, 8).verdict, CertVerdict::Unique);
  }
}

TEST(AnalyticCert, JacobianMinors) {
  Ring r = testing::qq({"x", "y", "z"});
  auto minors = jacobian_minors(I(r, {"x*y", "z"}), 2);
  ASSERT_TRUE(minors);
  IdealHandle sing(r, *minors);
  EXPECT_FALSE(sing.is_unit());
}

}  // namespace
}  // namespace toploc
