#include <gtest/gtest.h>

#include <bit>

#include "support/testing.hpp"
#include "toploc/groebner/ideal_ops.hpp"
#include "toploc/variety/irreducible.hpp"
#include "toploc/variety/minimal_primes.hpp"
#include "toploc/variety/module.hpp"
#include "toploc/variety/points.hpp"

namespace toploc {
namespace {

using testing::Gen;
using testing::I;
using testing::keys;
using testing::P;

TEST(MinimalPrimes, MonomialVertexCovers) {
  Ring r = testing::qq({"x", "y", "z"});
  auto primes = minimal_primes(I(r, {"x*y", "x*z"}));
  EXPECT_EQ(keys(primes), keys(std::vector<IdealHandle>{I(r, {"x"}), I(r, {"y", "z"})}));
  for (const PrimeCert& p : primes) EXPECT_EQ(p.kind(), CertKind::Coordinate);
  EXPECT_EQ(keys(minimal_primes(I(r, {"x^2"}))), keys(std::vector<IdealHandle>{I(r, {"x"})}));
}

TEST(MinimalPrimes, VerifiedHints) {
  Ring r = testing::qq({"x", "y"});
  IdealHandle J = I(r, {"(x-1)*x", "(x-1)*y"});
  HintTable hints;
  hints.add(J, {I(r, {"x - 1"}), I(r, {"x", "y"})});
  auto primes = minimal_primes(J, hints);
  ASSERT_EQ(primes.size(), 2u);
  EXPECT_EQ(primes[0].kind(), CertKind::Linear);
  EXPECT_EQ(primes[1].kind(), CertKind::Coordinate);
  EXPECT_FALSE(primes[0].conditional());
}

TEST(MinimalPrimes, BadHintRejected) {
  Ring r = testing::qq({"x", "y"});
  IdealHandle J = I(r, {"(x-1)*x", "(x-1)*y"});
  HintTable missing;
  missing.add(J, {I(r, {"x - 1"})});
  EXPECT_THROW(minimal_primes(J, missing), Error);
  HintTable nested;
  nested.add(J, {I(r, {"x - 1"}), I(r, {"x", "y"}), I(r, {"x - 1", "y"})});
  EXPECT_THROW(minimal_primes(J, nested), Error);
}

TEST(MinimalPrimes, UnverifiableHintIsAsserted) {
  Ring r = testing::qq({"x", "y", "z"});
  IdealHandle J = I(r, {"x^2 + y^2 + z^2 - 1", "x*y*z - 1"});
  HintTable hints;
  hints.add(J, {J});
  auto primes = minimal_primes(J, hints);
  ASSERT_EQ(primes.size(), 1u);
  EXPECT_TRUE(primes[0].conditional());
}

TEST(MinimalPrimes, SplittingWithoutHints) {
  Ring r = testing::qq({"x", "y"});
  auto primes = minimal_primes(I(r, {"(x-1)*x", "(x-1)*y"}));
  EXPECT_EQ(keys(primes), keys(std::vector<IdealHandle>{I(r, {"x - 1"}), I(r, {"x", "y"})}));
  auto node = minimal_primes(I(r, {"y^2 - x^2 - x^3"}));
  ASSERT_EQ(node.size(), 1u);
  EXPECT_EQ(node[0].kind(), CertKind::PrincipalVerified);
}

TEST(MinimalPrimes, RadicalInvariance) {
  Gen g(3);
  Ring r = testing::qq({"x", "y", "z", "w"});
  for (int round = 0; round < 30; ++round) {
    auto supports = g.antichain(4, 4);
    IdealHandle a = testing::squarefree_ideal(r, supports);
    std::vector<Poly> powered;
    for (const Poly& f : a.generators()) powered.push_back(f.pow(static_cast<unsigned>(g.uniform(1, 3))) * P(r, g.coin() ? "x" : "1"));
    IdealHandle b(r, powered);
    if (!gb::radical_contains(b, a) || !gb::radical_contains(a, b)) continue;
    EXPECT_EQ(keys(minimal_primes(a)), keys(minimal_primes(b)));
  }
}

TEST(MinimalPrimes, MonomialAgreesWithBruteForce) {
  Gen g(4);
  Ring r = testing::qq({"x", "y", "z", "w"});
  for (int round = 0; round < 60; ++round) {
    auto supports = g.antichain(4, 5);
    IdealHandle a = testing::squarefree_ideal(r, supports);
    std::vector<std::uint32_t> containing;
    for (std::uint32_t s = 0; s < 16; ++s) {
      if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t e) { return (e & s) != 0; })) {
        containing.push_back(s);
      }
    }
    std::vector<IdealHandle> expected;
    for (std::uint32_t s : containing) {
      bool minimal = std::none_of(containing.begin(), containing.end(),
                                  [&](std::uint32_t t) { return t != s && (t & s) == t; });
      if (minimal) expected.push_back(IdealHandle::variables(r, s));
    }
    EXPECT_EQ(keys(minimal_primes(a)), keys(expected));
  }
}

TEST(Assh, Examples) {
  Ring r3 = testing::qq({"x", "y", "z"});
  AsshResult a = assh(ModuleSpec(I(r3, {"x*y", "x*z"})));
  EXPECT_EQ(a.d, 2);
  EXPECT_EQ(keys(a.primes), keys(std::vector<IdealHandle>{I(r3, {"x"})}));
  Ring r2 = testing::qq({"x", "y"});
  AsshResult z = assh(ModuleSpec(IdealHandle::zero(r2)));
  EXPECT_EQ(z.d, 2);
  ASSERT_EQ(z.primes.size(), 1u);
  EXPECT_TRUE(z.primes[0].ideal().is_zero());
  AsshResult c = assh(ModuleSpec(I(r2, {"x*y"})));
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(keys(c.primes), keys(std::vector<IdealHandle>{I(r2, {"x"}), I(r2, {"y"})}));
}

TEST(Assh, SubsetOfMinimalPrimesWithDimensionD) {
  Gen g(8);
  Ring r = testing::qq({"x", "y", "z", "w"});
  for (int round = 0; round < 40; ++round) {
    IdealHandle b = testing::squarefree_ideal(r, g.antichain(4, 4));
    if (b.is_unit()) continue;
    AsshResult a = assh(ModuleSpec(b));
    auto mins = keys(minimal_primes(b));
    for (const PrimeCert& p : a.primes) {
      EXPECT_EQ(p.dim(), a.d);
      EXPECT_TRUE(std::binary_search(mins.begin(), mins.end(), p.key()));
    }
    EXPECT_EQ(a.d, gb::dimension(b));
  }
}

TEST(Assh, LocalizedModuleKeepsPrimesInsideTheMaximalIdeal) {
  Ring r = testing::qq({"x", "y"});
  auto m = certify_prime(I(r, {"x", "y"}));
  ASSERT_TRUE(m);
  AsshResult a = assh(ModuleSpec(I(r, {"x*(y - 1)"}), *m));
  EXPECT_EQ(keys(a.primes), keys(std::vector<IdealHandle>{I(r, {"x"})}));
  EXPECT_THROW(ModuleSpec(I(r, {"x - 1"}), *m), Error);
}

TEST(IsolatedPoints, Examples) {
  Ring r = testing::qq({"x", "y"});
  auto a = isolated_zero_dim_primes(I(r, {"x", "y"}));
  EXPECT_EQ(keys(a.primes), keys(std::vector<IdealHandle>{I(r, {"x", "y"})}));
  auto b = isolated_zero_dim_primes(I(r, {"(x-1)*x", "(x-1)*y"}));
  EXPECT_TRUE(b.complete);
  EXPECT_EQ(keys(b.primes), keys(std::vector<IdealHandle>{I(r, {"x", "y"})}));
  auto c = isolated_zero_dim_primes(I(r, {"x"}));
  EXPECT_TRUE(c.complete);
  EXPECT_TRUE(c.primes.empty());
  auto d = isolated_zero_dim_primes(I(r, {"x^2 - 1", "y^2 - 4"}));
  EXPECT_EQ(d.primes.size(), 4u);
}

TEST(IsolatedPoints, IrrationalPointsMakeTheAnswerIncomplete) {
  Ring r = testing::qq({"x", "y"});
  auto a = isolated_zero_dim_primes(I(r, {"x^2 - 2", "y"}));
  EXPECT_FALSE(a.complete);
}

TEST(MonomialAss, Examples) {
  Ring r2 = testing::qq({"x", "y"});
  EXPECT_EQ(keys(monomial_ass(I(r2, {"x^2", "x*y"}))), keys(std::vector<IdealHandle>{I(r2, {"x"}), I(r2, {"x", "y"})}));
  EXPECT_EQ(keys(monomial_ass(I(r2, {"x"}))), keys(std::vector<IdealHandle>{I(r2, {"x"})}));
  Ring r3 = testing::qq({"x", "y", "z"});
  EXPECT_EQ(keys(monomial_ass(I(r3, {"x*y", "x*z", "y*z"}))),
            keys(std::vector<IdealHandle>{I(r3, {"x", "y"}), I(r3, {"x", "z"}), I(r3, {"y", "z"})}));
}

TEST(MonomialAss, ContainsMinimalPrimes) {
  Gen g(9);
  Ring r = testing::qq({"x", "y", "z"});
  for (int round = 0; round < 30; ++round) {
    std::vector<Poly> gens;
    int k = g.uniform(1, 3);
    for (int i = 0; i < k; ++i) gens.push_back(Poly::term(r, g.monomial(3, 4), Scalar(1)));
    IdealHandle b(r, gens);
    if (b.is_unit()) continue;
    auto ass = keys(monomial_ass(b));
    for (const auto& k2 : keys(minimal_primes(b))) EXPECT_TRUE(std::binary_search(ass.begin(), ass.end(), k2));
  }
}

TEST(Points, UnivariateRoots) {
  Field q = Field::rationals();
  RootSet rs = univariate_roots(q, Univariate{Scalar(-6), Scalar(11), Scalar(-6), Scalar(1)});
  EXPECT_TRUE(rs.splits);
  EXPECT_EQ(rs.roots.size(), 3u);
  RootSet no = univariate_roots(q, Univariate{Scalar(-2), Scalar(0), Scalar(1)});
  EXPECT_TRUE(no.roots.empty());
  EXPECT_FALSE(no.splits);
  Field f = Field::prime(101);
  RootSet fr = univariate_roots(f, Univariate{Scalar(100), Scalar(0), Scalar(1)});
  EXPECT_TRUE(fr.splits);
  EXPECT_EQ(fr.roots.size(), 2u);
}

TEST(Points, RationalPointsAndScanAgree) {
  Ring r = testing::fp(7, {"x", "y"});
  IdealHandle J = I(r, {"x^2 - 1", "y - x^3"});
  PointSet pts = rational_points(J);
  EXPECT_TRUE(pts.complete);
  auto scanned = scan_points(J);
  ASSERT_TRUE(scanned);
  EXPECT_EQ(pts.points.size(), scanned->size());
}

TEST(Points, Isolation) {
  Ring r = testing::qq({"x", "y"});
  IdealHandle J = I(r, {"x*(x - 1)", "x*y"});
  EXPECT_FALSE(is_isolated_point(J, I(r, {"x", "y"})));
  EXPECT_TRUE(is_isolated_point(J, I(r, {"x - 1", "y"})));
}

TEST(Irreducible, Certificates) {
  Ring r = testing::qq({"x", "y", "z"});
  EXPECT_TRUE(certify_irreducible(P(r, "y^2 - x^2 - x^3")));
  EXPECT_FALSE(certify_irreducible(P(r, "y^2 - x^2")));
  EXPECT_TRUE(certify_irreducible(P(r, "x + y*z")));
  EXPECT_TRUE(certify_irreducible(P(r, "x^2 - 2")));
  EXPECT_FALSE(certify_irreducible(P(r, "x^2 - 4")));
  auto s = poly_sqrt(P(r, "x^2 + 2*x*y + y^2"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->pow(2), P(r, "x^2 + 2*x*y + y^2"));
}

TEST(PrimeCert, Kinds) {
  Ring r = testing::qq({"x", "y"});
  EXPECT_EQ(certify_prime(I(r, {"x", "y"}))->kind(), CertKind::Coordinate);
  EXPECT_EQ(certify_prime(I(r, {"x - 1", "y + 2"}))->kind(), CertKind::RationalPoint);
  EXPECT_EQ(certify_prime(I(r, {"x - y"}))->kind(), CertKind::Linear);
  EXPECT_EQ(certify_prime(I(r, {"y^2 - x^3"}))->kind(), CertKind::PrincipalVerified);
  EXPECT_FALSE(certify_prime(I(r, {"x*y"})));
  EXPECT_TRUE(certify_prime(I(r, {"x - 1", "y + 2"}))->is_maximal());
}

}  // namespace
}  // namespace toploc
