#include <gtest/gtest.h>

#include "flatrank/catalog.hpp"
#include "flatrank/classify.hpp"
#include "flatrank/diagram.hpp"
#include "flatrank/growth.hpp"
#include "flatrank/rank.hpp"
#include "oracles/cosine_signature.hpp"
#include "oracles/corpus.hpp"
#include "oracles/tits_ball.hpp"
#include "support.hpp"

using namespace flatrank;

TEST(ParseDiagram, TriangleOfThrees) {
  const auto d = parse_diagram("rank 3; edge 1 2 3; edge 2 3 3; edge 1 3 3");
  EXPECT_EQ(d.rank(), 3);
  for (Vertex s = 0; s < 3; ++s)
    for (Vertex t = 0; t < 3; ++t)
      if (s != t) EXPECT_EQ(d.label(s, t), 3);
}

TEST(ParseDiagram, InfinityAndDefault) {
  EXPECT_EQ(parse_diagram("rank 2; edge 1 2 inf").label(0, 1), kInfinity);
  EXPECT_EQ(parse_diagram("rank 2").label(0, 1), 2);
}

TEST(ParseDiagram, NamesAndComments) {
  const auto d = parse_diagram("# header\nrank 2\nname 1 s\nname 2 t # trailing\nedge s t 4\n");
  EXPECT_EQ(d.name(0), "s");
  EXPECT_EQ(d.label(0, 1), 4);
  EXPECT_EQ(parse_diagram(d.to_text()).to_text(), d.to_text());
}

TEST(ParseDiagram, Rejects) {
  EXPECT_THROW(parse_diagram(""), ParseError);
  EXPECT_THROW(parse_diagram("edge 1 2 3"), ParseError);
  EXPECT_THROW(parse_diagram("rank 2; edge 1 1 3"), ParseError);
  EXPECT_THROW(parse_diagram("rank 2; edge 1 3 3"), ParseError);
  EXPECT_THROW(parse_diagram("rank 2; edge 1 2 1"), ParseError);
  EXPECT_THROW(parse_diagram("rank 2; edge 1 2 x"), ParseError);
  EXPECT_THROW(parse_diagram("rank 2; edge 1 2 3; edge 2 1 4"), ParseError);
  EXPECT_THROW(parse_diagram("rank 17"), ResourceError);
  EXPECT_THROW(parse_diagram("rank 2; frobnicate"), ParseError);
}

TEST(Components, Examples) {
  const auto tri = testing_support::sample("atilde2.cox");
  EXPECT_EQ(irreducible_components(tri, tri.all()), std::vector<VertexSet>{0b111});
  const auto two = parse_diagram("rank 4; edge 1 2 inf; edge 3 4 inf");
  EXPECT_EQ(irreducible_components(two, two.all()), (std::vector<VertexSet>{0b0011, 0b1100}));
  EXPECT_TRUE(irreducible_components(two, 0).empty());
}

TEST(Classify, Examples) {
  const auto tri = testing_support::sample("atilde2.cox");
  const auto whole = classify_subset(tri, tri.all());
  EXPECT_EQ(whole.kind, SubsetKind::Affine);
  ASSERT_EQ(whole.components.size(), 1u);
  EXPECT_EQ(whole.components[0].family->name(), "~A_2");
  for (VertexSet pair : {0b011u, 0b101u, 0b110u}) {
    const auto c = classify_subset(tri, pair);
    EXPECT_EQ(c.kind, SubsetKind::Spherical);
    EXPECT_EQ(c.components[0].family->name(), "A_2");
  }
  const auto cyc = testing_support::sample("cycle5.cox");
  EXPECT_EQ(classify_subset(cyc, cyc.all()).kind, SubsetKind::Indefinite);
  EXPECT_EQ(classify_subset(cyc, 0).kind, SubsetKind::Spherical);
}

// Every subset of every corpus diagram against the cosine-matrix signature.
TEST(Classify, MatchesSignatureOnCorpus) {
  auto corpus = oracle::generated_corpus(40);
  for (auto& e : oracle::sample_files(testing_support::data_dir())) corpus.push_back(std::move(e));
  for (const auto& e : corpus) {
    const SubsetAtlas atlas(e.diagram);
    for (VertexSet t = 0; t <= e.diagram.all(); ++t)
      ASSERT_EQ(atlas.kind(t), oracle::subset_kind(e.diagram, t)) << e.name << " subset " << t;
  }
}

TEST(Classify, CatalogFamiliesBySignature) {
  // Standard shapes of every family, each recognised with the right kind.
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"rank 4; edge 1 2 3; edge 2 3 3; edge 3 4 3", "A_4"},
      {"rank 4; edge 1 2 4; edge 2 3 3; edge 3 4 3", "B_4"},
      {"rank 4; edge 1 3 3; edge 2 3 3; edge 3 4 3", "D_4"},
      {"rank 6; edge 1 3 3; edge 3 4 3; edge 4 5 3; edge 5 6 3; edge 2 4 3", "E_6"},
      {"rank 4; edge 1 2 3; edge 2 3 4; edge 3 4 3", "F_4"},
      {"rank 3; edge 1 2 5; edge 2 3 3", "H_3"},
      {"rank 2; edge 1 2 7", "I_2(7)"},
      {"rank 4; edge 1 2 3; edge 2 3 3; edge 3 4 3; edge 4 1 3", "~A_3"},
      {"rank 2; edge 1 2 inf", "~A_1"},
      {"rank 3; edge 1 2 4; edge 2 3 4", "~C_2"},
      {"rank 3; edge 1 2 3; edge 2 3 6", "~G_2"},
      {"rank 5; edge 1 2 3; edge 2 3 3; edge 3 4 4; edge 4 5 3", "~F_4"},
  };
  for (const auto& [text, name] : cases) {
    const auto d = parse_diagram(text);
    const auto c = classify_subset(d, d.all());
    ASSERT_EQ(c.components.size(), 1u) << name;
    ASSERT_TRUE(c.components[0].family) << name;
    EXPECT_EQ(c.components[0].family->name(), name);
    EXPECT_EQ(c.kind, oracle::subset_kind(d, d.all())) << name;
  }
}

TEST(Classify, SphericalOrdersMatchBfs) {
  for (const char* text : {"rank 2; edge 1 2 3", "rank 2; edge 1 2 4", "rank 3; edge 1 2 3; edge 2 3 3",
                           "rank 3; edge 1 2 4; edge 2 3 3", "rank 3; edge 1 2 5; edge 2 3 3",
                           "rank 4; edge 1 3 3; edge 2 3 3; edge 3 4 3", "rank 3; edge 1 2 3"}) {
    const auto d = parse_diagram(text);
    EXPECT_EQ(spherical_poincare(d, d.all()).evaluate(BigInt(1)), BigInt(oracle::bfs_order(d))) << text;
  }
}

TEST(Perpendicular, Examples) {
  const auto thm = thmC_diagram(2);
  EXPECT_FALSE(perpendicular(thm, 0b00011111, 0b11100000));
  const auto cyc = testing_support::sample("cycle5.cox");
  EXPECT_TRUE(perpendicular(cyc, 0b00001, 0b00100));
  EXPECT_FALSE(perpendicular(cyc, 0b00011, 0b00110));
}

TEST(OddComponents, Examples) {
  EXPECT_EQ(odd_components(testing_support::sample("a2.cox")).size(), 1u);
  EXPECT_EQ(odd_components(testing_support::sample("b2.cox")).size(), 2u);
  EXPECT_EQ(odd_components(testing_support::sample("dinfty.cox")).size(), 2u);
}

TEST(Moussong, Examples) {
  EXPECT_TRUE(moussong_hyperbolic(testing_support::sample("cycle5.cox")));
  EXPECT_FALSE(moussong_hyperbolic(testing_support::sample("atilde2.cox")));
  for (int n = 2; n <= 5; ++n) EXPECT_FALSE(moussong_hyperbolic(thmC_diagram(n))) << n;
  EXPECT_TRUE(moussong_hyperbolic(thmC_diagram(1)));
}
