#include <gtest/gtest.h>

#include "support/testing.hpp"

namespace toploc {
namespace {

using testing::Gen;
using testing::P;

TEST(Poly, AddCancels) {
  Ring r = testing::qq({"x", "y"});
  EXPECT_EQ(P(r, "x+y") + P(r, "x-y"), P(r, "2*x"));
}

TEST(Poly, DifferenceOfSquares) {
  Ring r = testing::qq({"x", "y"});
  EXPECT_EQ(P(r, "x+y") * P(r, "x-y"), P(r, "x^2-y^2"));
}

TEST(Poly, FrobeniusOverF5) {
  Ring r = testing::fp(5, {"x"});
  Poly f = P(r, "x+1");
  Poly g = f * f;
  g = g * g * f;
  EXPECT_EQ(g, P(r, "x^5+1"));
  EXPECT_EQ(f.pow(5), P(r, "x^5+1"));
}

TEST(Poly, ExactDivisionByTerm) {
  Ring r = testing::qq({"x", "y"});
  Poly f = P(r, "6*x^3*y + 4*x^2*y^2");
  EXPECT_EQ(f.divide_by_term(Monomial::variable(0, 2), Scalar(2)), P(r, "3*x*y + 2*y^2"));
  EXPECT_THROW(f.divide_by_term(Monomial::variable(1, 2), Scalar(1)), Error);
}

TEST(Poly, Evaluate) {
  Ring r = testing::qq({"x", "y"});
  std::vector<Scalar> pt{Scalar(2), Scalar(1)};
  EXPECT_EQ(P(r, "x^2+y").evaluate(pt), Scalar(5));
  std::vector<Scalar> zero{Scalar(0), Scalar(0)};
  Poly f = P(r, "3*x^2*y - 7/2*y + 11/3");
  EXPECT_EQ(f.evaluate(zero), f.constant_term());
}

TEST(Poly, NodalCubicRationalPoints) {
  Ring r = testing::qq({"x", "y"});
  Poly f = P(r, "y^2-x^2-x^3");
  for (int s : {6, -6}) {
    std::vector<Scalar> pt{Scalar(3), Scalar(s)};
    // 36 - 9 - 27
    EXPECT_EQ(f.evaluate(pt), Scalar(0));
  }
}

TEST(Poly, ParseErrors) {
  Ring r = testing::qq({"x", "y"});
  EXPECT_THROW(P(r, "x+"), PolyParseError);
  EXPECT_THROW(P(r, "z"), Error);
  EXPECT_THROW(P(r, "x/0"), Error);
  try {
    P(r, "x + * y");
    FAIL();
  } catch (const PolyParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(Poly, PrintParseRoundTrip) {
  Gen g(11);
  for (const Ring& r : {testing::qq({"x", "y", "z"}), testing::fp(7, {"a", "b"})}) {
    for (int i = 0; i < 100; ++i) {
      Poly f = g.poly(r, 6, 5);
      EXPECT_EQ(P(r, f.to_string()), f) << f.to_string();
    }
  }
}

TEST(Poly, PrimeFieldReduction) {
  Ring r = testing::fp(5, {"x"});
  EXPECT_EQ(P(r, "7*x + 10"), P(r, "2*x"));
  EXPECT_EQ(P(r, "x/2"), P(r, "3*x"));
}

TEST(Field, Arithmetic) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.inv(Scalar(3)), Scalar(5));
  EXPECT_EQ(f.pow(Scalar(3), 6), Scalar(1));
  EXPECT_EQ(f.name(), "F7");
  EXPECT_TRUE(f.sqrt(Scalar(2)).has_value());
  EXPECT_FALSE(f.sqrt(Scalar(3)).has_value());
  Field q = Field::rationals();
  EXPECT_EQ(*q.sqrt(Scalar(9, 4)), Scalar(3, 2));
  EXPECT_FALSE(q.sqrt(Scalar(2)).has_value());
  EXPECT_THROW(Field::prime(6), Error);
}

TEST(Poly, RingMismatchThrows) {
  Ring a = testing::qq({"x"});
  Ring b = testing::qq({"y"});
  EXPECT_THROW(P(a, "x") + P(b, "y"), Error);
}

class RingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RingAxioms, HoldOnRandomPolys) {
  Gen g(static_cast<std::uint64_t>(GetParam()));
  Ring r = GetParam() % 2 ? testing::qq({"x", "y", "z"}) : testing::fp(3, {"x", "y", "z"});
  for (int i = 0; i < 40; ++i) {
    Poly a = g.poly(r, 4, 3), b = g.poly(r, 4, 3), c = g.poly(r, 4, 3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_P(RingAxioms, EvaluateIsAHomomorphism) {
  Gen g(100 + static_cast<std::uint64_t>(GetParam()));
  Ring r = GetParam() % 2 ? testing::qq({"x", "y"}) : testing::fp(5, {"x", "y"});
  const Field& f = r->field();
  for (int i = 0; i < 40; ++i) {
    Poly a = g.poly(r, 5, 4), b = g.poly(r, 5, 4);
    auto pt = g.point(f, 2);
    for (Scalar& s : pt) s = f.from_rational(s);
    EXPECT_EQ((a * b).evaluate(pt), f.mul(a.evaluate(pt), b.evaluate(pt)));
    EXPECT_EQ((a + b).evaluate(pt), f.add(a.evaluate(pt), b.evaluate(pt)));
  }
}

TEST_P(RingAxioms, CanonicalFormIgnoresConstructionOrder) {
  Gen g(200 + static_cast<std::uint64_t>(GetParam()));
  Ring r = testing::qq({"x", "y", "z"});
  for (int i = 0; i < 30; ++i) {
    std::vector<Term> ts;
    for (int k = 0; k < 6; ++k) ts.push_back(Term{g.monomial(3, 4), g.scalar(r->field())});
    std::vector<Term> shuffled = ts;
    std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
    Poly a = Poly::from_terms(r, ts);
    Poly b = Poly::from_terms(r, shuffled);
    Poly c(r);
    for (const Term& t : shuffled) c += Poly::term(r, t.monomial, t.coeff);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    ASSERT_EQ(a.terms().size(), c.terms().size());
    for (std::size_t k = 0; k < a.terms().size(); ++k) EXPECT_EQ(a.terms()[k].monomial, c.terms()[k].monomial);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingAxioms, ::testing::Range(1, 5));

TEST(Poly, DegreesAndParts) {
  Ring r = testing::qq({"x", "y"});
  Poly f = P(r, "x^3*y + 2*x*y - 5");
  EXPECT_EQ(f.total_degree(), 4);
  EXPECT_EQ(f.order(), 0);
  EXPECT_EQ(f.degree_in(0), 3u);
  EXPECT_EQ(f.homogeneous_part(2), P(r, "2*x*y"));
  EXPECT_EQ(f.truncated(4), P(r, "2*x*y - 5"));
  EXPECT_EQ(f.derivative(0), P(r, "3*x^2*y + 2*y"));
  EXPECT_EQ(P(r, "0").total_degree(), -1);
}

TEST(Poly, SubstituteAndDivide) {
  Ring r = testing::qq({"x", "y"});
  Poly f = P(r, "x^2 - y");
  std::vector<Poly> images{P(r, "x + 1"), P(r, "y")};
  EXPECT_EQ(f.substitute(images), P(r, "x^2 + 2*x + 1 - y"));
  EXPECT_EQ(divide_exact(P(r, "x^2 - y^2"), P(r, "x - y")), P(r, "x + y"));
  EXPECT_THROW(divide_exact(P(r, "x^2 + y^2"), P(r, "x - y")), Error);
}

}  // namespace
}  // namespace toploc
