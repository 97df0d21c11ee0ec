#include <gtest/gtest.h>

#include "flatrank/tdlc.hpp"
#include "oracles/tree_brute.hpp"

using namespace flatrank;

namespace {

TreeVertex v(int axis, std::vector<std::uint8_t> path = {}) { return {axis, std::move(path)}; }

}  // namespace

TEST(Displacement, Examples) {
  const TreeSpec t{2, 4};
  const auto a = TreeAut::translation(1);
  EXPECT_EQ(displacement(t, a, {v(0)}), LogValue(9));
  EXPECT_EQ(displacement(t, a, {v(0), v(1)}), LogValue(2).times(2));
  EXPECT_EQ(displacement(t, TreeAut::reflection(0), {v(0), v(0, {0})}), LogValue(1));
  EXPECT_THROW(displacement(t, a, {v(4)}), ResourceError);
}

TEST(TidySearch, Examples) {
  const auto r = tidy_search({2, 3}, TreeAut::translation(1), 3);
  EXPECT_EQ(r.minimum.expression(), "2 log 2");
  EXPECT_EQ(r.witness, (VertexList{v(0), v(1)}));
  EXPECT_EQ(tidy_search({2, 3}, TreeAut::reflection(1), 3).minimum, LogValue(1));
  const auto q3 = tidy_search({3, 5}, TreeAut::translation(2), 5);
  EXPECT_EQ(q3.minimum.expression(), "4 log 3");
  // The length-2 segment attains the same minimum; the least witness is smaller.
  EXPECT_EQ(displacement({3, 5}, TreeAut::translation(2), {v(0), v(1), v(2)}), q3.minimum);
  EXPECT_EQ(q3.witness, (VertexList{v(0), v(1)}));
}

// Every subtree of the ball, q = 2 up to radius 3 and q = 3 up to radius 2.
TEST(TidySearch, MatchesExhaustiveSubtrees) {
  for (auto [q, max_r] : {std::pair{2, 3}, std::pair{3, 2}})
    for (int r = 0; r <= max_r; ++r)
      for (int ell : {-2, -1, 1, 2, 3}) {
        const TreeSpec t{q, r};
        const auto alpha = TreeAut::translation(ell);
        const auto brute = oracle::brute_tidy(t, alpha, r);
        const auto fast = tidy_search(t, alpha, r);
        EXPECT_EQ(fast.minimum, brute.minimum) << q << " " << r << " " << ell;
        EXPECT_EQ(fast.witness, brute.witness) << q << " " << r << " " << ell;
      }
  for (int c : {-1, 0, 1}) {
    const TreeSpec t{2, 2};
    const auto brute = oracle::brute_tidy(t, TreeAut::reflection(c), 2);
    EXPECT_EQ(tidy_search(t, TreeAut::reflection(c), 2).minimum, brute.minimum);
  }
}

TEST(Scale, Examples) {
  EXPECT_EQ(scale({2, 4}, TreeAut::translation(1), 4), 2);
  EXPECT_EQ(scale({2, 4}, TreeAut::translation(1).power(2), 4), 4);
  EXPECT_EQ(scale({2, 4}, TreeAut::reflection(0), 4), 1);
  EXPECT_EQ(modular_function({2, 4}, TreeAut::reflection(0), 4), Rational(1));
}

TEST(Scale, MatchesLimitFormula) {
  for (int q : {2, 3, 4})
    for (int ell : {1, 2, 3}) {
      const TreeSpec t{q, 5};
      const auto alpha = TreeAut::translation(ell);
      const auto s = scale(t, alpha, 5);
      EXPECT_EQ(s, oracle::limit_scale(t, alpha)) << q << " " << ell;
      EXPECT_EQ(s, boost::multiprecision::pow(LogValue::Int(q), ell));
      EXPECT_EQ(scale(t, alpha.power(2), 5), s * s);
      EXPECT_EQ(modular_function(t, alpha, 5), Rational(1));
    }
}

TEST(Tidying, VertexSeed) {
  const auto r = tidying_procedure({2, 6}, TreeAut::translation(1), {v(0)});
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.above, (VertexList{v(0), v(1)}));
  EXPECT_EQ(r.output, r.above);
  EXPECT_TRUE(r.k_alpha_contained);
  EXPECT_EQ(r.displacement.expression(), "2 log 2");
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_FALSE(r.trace[0].tidy_above);
  EXPECT_TRUE(r.trace[1].tidy_above);
}

TEST(Tidying, AlreadyTidy) {
  const auto r = tidying_procedure({2, 6}, TreeAut::translation(1), {v(0), v(1)});
  EXPECT_EQ(r.n, 0);
  EXPECT_EQ(r.output, (VertexList{v(0), v(1)}));
}

TEST(Tidying, SpurSeeds) {
  for (int q : {2, 3})
    for (int ell : {1, 2})
      for (const VertexList& seed : {VertexList{v(0), v(0, {0})}, VertexList{v(0, {0})}, VertexList{v(0), v(0, {0, 1})},
                                     VertexList{v(-1), v(1)}, VertexList{v(2)}}) {
        const TreeSpec t{q, 7};
        const auto alpha = TreeAut::translation(ell);
        const auto r = tidying_procedure(t, alpha, seed);
        EXPECT_EQ(r.displacement, r.minimum) << q << " " << ell << " " << to_string(seed);
        EXPECT_EQ(r.displacement, LogValue(q).times(2 * ell));
        if (r.k_alpha_contained) EXPECT_EQ(r.output, r.above);
      }
}

TEST(Tidying, Elliptic) {
  const auto r = tidying_procedure({3, 4}, TreeAut::reflection(0), {v(1), v(0, {1})});
  EXPECT_EQ(r.displacement, LogValue(1));
  EXPECT_TRUE(r.k_alpha_contained);
}

TEST(Flat, TwoTranslations) {
  FlatSubgroupSpec h{{{{2, 4}, TreeAut::translation(1)}, {{2, 4}, TreeAut::translation(1)}}};
  const auto r = flat_rank_flat_subgroup(h, 3);
  EXPECT_EQ(r.rank, 2);
  EXPECT_TRUE(r.norm_axioms);
  for (const auto& e : r.norms)
    EXPECT_EQ(e.norm, LogValue(2).times(2 * (std::abs(e.exponents[0]) + std::abs(e.exponents[1]))));
}

TEST(Flat, SingleFactors) {
  EXPECT_EQ(flat_rank_flat_subgroup({{{{3, 3}, TreeAut::reflection(1)}}}).rank, 0);
  for (int q : {2, 3})
    for (int ell : {1, 2}) {
      const auto r = flat_rank_flat_subgroup({{{{q, 5}, TreeAut::translation(ell)}}}, 3);
      EXPECT_EQ(r.rank, 1);
      EXPECT_TRUE(r.norm_axioms);
      for (const auto& e : r.norms) EXPECT_EQ(e.norm, LogValue(q).times(2 * ell * std::abs(e.exponents[0])));
    }
}

TEST(Flat, MixedProduct) {
  FlatSubgroupSpec h{{{{2, 3}, TreeAut::translation(1)}, {{3, 3}, TreeAut::reflection(0)}, {{3, 3}, TreeAut::translation(2)}}};
  const auto r = flat_rank_flat_subgroup(h, 2);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.elliptic_coordinates, std::vector<int>{1});
  EXPECT_TRUE(r.norm_axioms);
  for (int i : r.translation_coordinates) {
    const auto& f = h.factors[i];
    EXPECT_EQ(fixator_index(f.tree, f.generator.apply(r.tidy[i]), r.tidy[i]) /
                  fixator_index(f.tree, f.generator.inverse().apply(r.tidy[i]), r.tidy[i]),
              1);
  }
  EXPECT_THROW(flat_rank_flat_subgroup(FlatSubgroupSpec{}), DomainError);
}
