#include <gtest/gtest.h>

#include "flatrank/growth.hpp"
#include "flatrank/rank.hpp"
#include "oracles/tits_ball.hpp"
#include "support.hpp"

using namespace flatrank;

namespace {

IntPolynomial poly(std::vector<int> c) {
  std::vector<BigInt> out(c.begin(), c.end());
  return IntPolynomial(out);
}

}  // namespace

TEST(SphericalPoincare, Examples) {
  EXPECT_EQ(spherical_poincare(testing_support::sample("a2.cox"), 0b11), poly({1, 2, 2, 1}));
  EXPECT_EQ(spherical_poincare(testing_support::sample("a2.cox"), 0b01), poly({1, 1}));
  const auto b2 = spherical_poincare(testing_support::sample("b2.cox"), 0b11);
  EXPECT_EQ(b2, poly({1, 1}) * poly({1, 1, 1, 1}));
  EXPECT_EQ(b2.evaluate(BigInt(1)), 8);
}

TEST(SphericalPoincare, ExceptionalFromExponents) {
  const auto e8 = parse_diagram("rank 8; edge 1 3 3; edge 3 4 3; edge 4 5 3; edge 5 6 3; edge 6 7 3; edge 7 8 3; edge 2 4 3");
  EXPECT_EQ(spherical_poincare(e8, e8.all()).evaluate(BigInt(1)), BigInt(696729600));
  const auto h4 = parse_diagram("rank 4; edge 1 2 5; edge 2 3 3; edge 3 4 3");
  EXPECT_EQ(spherical_poincare(h4, h4.all()).evaluate(BigInt(1)), BigInt(14400));
}

TEST(GrowthSeries, Examples) {
  const auto dinf = growth_series(testing_support::sample("dinfty.cox"));
  EXPECT_EQ(dinf.numerator(), poly({1, 1}));
  EXPECT_EQ(dinf.denominator(), poly({1, -1}));
  const auto a1a1 = growth_series(parse_diagram("rank 2"));
  EXPECT_EQ(a1a1.numerator(), poly({1, 2, 1}));
  EXPECT_EQ(a1a1.denominator(), poly({1}));
}

TEST(GrowthSeries, TaylorMatchesBfs) {
  for (const char* file : {"a2.cox", "b2.cox", "a3.cox", "dinfty.cox", "atilde1.cox", "atilde2.cox", "cycle5.cox"}) {
    const auto d = testing_support::sample(file);
    const int len = std::string(file) == "cycle5.cox" ? 9 : 12;
    const auto bfs = oracle::bfs_ball_counts(d, len);
    const auto c = growth_series(d).coefficients(len);
    for (int k = 0; k <= len; ++k) EXPECT_EQ(c[k], BigInt(bfs[k])) << file << " length " << k;
  }
}

TEST(Evaluate, Examples) {
  const auto dinf = growth_series(testing_support::sample("dinfty.cox"));
  const auto half = evaluate_growth(dinf, Rational(1, 2));
  EXPECT_TRUE(half.finite);
  EXPECT_EQ(half.value, Rational(3));
  EXPECT_FALSE(evaluate_growth(dinf, Rational(1)).finite);
  const auto a2 = evaluate_growth(growth_series(testing_support::sample("a2.cox")), Rational(1, 2));
  EXPECT_TRUE(a2.finite);
  EXPECT_EQ(a2.value, Rational(21, 8));
  EXPECT_THROW(evaluate_growth(dinf, Rational(0)), DomainError);
}

TEST(Radius, ExactRoots) {
  const auto r = radius_of_convergence(growth_series(testing_support::sample("atilde2.cox")));
  EXPECT_FALSE(r.infinite);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.hi, Rational(1));
  EXPECT_TRUE(radius_of_convergence(growth_series(testing_support::sample("a3.cox"))).infinite);
}

TEST(Radius, IrrationalRootIsolated) {
  // 1 - 3t + t^2 has smallest root (3 - sqrt 5)/2.
  const auto g = growth_series(testing_support::sample("cycle5.cox"));
  const auto r = radius_of_convergence(g);
  ASSERT_FALSE(r.infinite);
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.hi - r.lo, Rational(1, 1'000'000'000));
  const double rho = (3 - std::sqrt(5.0)) / 2;
  EXPECT_LT(static_cast<double>(r.lo), rho);
  EXPECT_GE(static_cast<double>(r.hi), rho);
  EXPECT_TRUE(evaluate_growth(g, r.lo).finite);
  EXPECT_FALSE(evaluate_growth(g, r.hi).finite);
}

TEST(GrowthSeries, ThmC2Closed) {
  const auto g = growth_series(thmC_diagram(2));
  EXPECT_EQ(g.numerator(), poly({1, 3, 4, 3, 1}));
  EXPECT_EQ(g.denominator(), poly({1, -5, -7, -5, 1}));
}
