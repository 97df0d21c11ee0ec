#include <gtest/gtest.h>

#include <random>

#include "flatrank/tree.hpp"
#include "oracles/tree_brute.hpp"

using namespace flatrank;

namespace {

TreeVertex v(int axis, std::vector<std::uint8_t> path = {}) { return {axis, std::move(path)}; }

}  // namespace

TEST(Tree, BallSizes) {
  // (q+1) q^(r-1) vertices at distance r.
  for (int q : {2, 3, 4}) {
    const TreeSpec t{q, 8};
    std::size_t expect = 1, sphere = q + 1;
    for (int r = 1; r <= 4; ++r, sphere *= q) {
      expect += sphere;
      EXPECT_EQ(t.ball(r).size(), expect) << q << " " << r;
    }
  }
}

TEST(Tree, DistanceAndGeodesic) {
  const TreeSpec t{3, 8};
  const auto ball = t.ball(3);
  for (const auto& a : ball)
    for (const auto& b : ball) {
      const auto g = geodesic(a, b);
      ASSERT_EQ(static_cast<int>(g.size()), tree_distance(a, b) + 1);
      EXPECT_EQ(g.front(), a);
      EXPECT_EQ(g.back(), b);
      for (std::size_t i = 1; i < g.size(); ++i) EXPECT_EQ(tree_distance(g[i - 1], g[i]), 1);
    }
}

TEST(FixatorIndex, Examples) {
  const TreeSpec t{2, 8};
  EXPECT_EQ(fixator_index(t, {v(0)}, {v(2)}), 6);
  EXPECT_EQ(fixator_index(t, {v(0)}, {v(1, {0})}), 6);
  EXPECT_EQ(fixator_index(t, {v(0), v(2)}, {v(1)}), 1);
  EXPECT_EQ(fixator_index(t, {v(0), v(1)}, {v(2)}), 2);
}

TEST(CoDistance, Examples) {
  const TreeSpec t{2, 8};
  EXPECT_EQ(co_distance(t, {v(0)}, {v(1)}), LogValue(9));
  EXPECT_EQ(co_distance(t, {v(0), v(1)}, {v(0), v(1)}), LogValue(1));
  EXPECT_EQ(co_distance(t, {v(0), v(1)}, {v(1), v(2)}), LogValue(4));
}

// The index formula against literal enumeration of images: all pairs of
// vertices and of adjacent pairs in the q = 2 ball of radius 4.
TEST(FixatorIndex, MatchesImageEnumerationExhaustive) {
  const TreeSpec t{2, 8};
  const auto ball = t.ball(4);
  std::vector<VertexList> sets;
  for (const auto& a : ball) sets.push_back({a});
  for (const auto& a : ball)
    for (const auto& b : t.neighbours(a))
      if (a < b && b.norm() <= 4) sets.push_back({a, b});
  for (const auto& a : sets)
    for (const auto& b : sets)
      ASSERT_EQ(fixator_index(t, a, b), oracle::image_count(t, a, b)) << to_string(a) << " " << to_string(b);
}

TEST(FixatorIndex, MatchesImageEnumerationSampled) {
  for (int q : {3, 4}) {
    const TreeSpec t{q, 8};
    const auto ball = t.ball(q == 3 ? 3 : 2);
    std::mt19937 rng(q);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
      VertexList a, b;
      for (int k = count(rng); k > 0; --k) a.insert(ball[pick(rng)]);
      for (int k = count(rng); k > 0; --k) b.insert(ball[pick(rng)]);
      ASSERT_EQ(fixator_index(t, a, b), oracle::image_count(t, a, b)) << to_string(a) << " " << to_string(b);
    }
  }
}

TEST(Tree, Validation) {
  EXPECT_THROW((TreeSpec{1, 3}.validate()), DomainError);
  EXPECT_THROW((TreeSpec{2, 9}.validate()), ResourceError);
  EXPECT_FALSE((TreeSpec{2, 8}.valid_vertex(v(0, {1}))));
  EXPECT_THROW(check_in_ball(TreeSpec{2, 2}, {v(3)}, "test"), ResourceError);
}
