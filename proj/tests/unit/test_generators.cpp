#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "p5hom/bench.hpp"
#include "p5hom/detect.hpp"
#include "p5hom/generators.hpp"
#include "p5hom/io.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace p5hom;

TEST(GeneratorTest, TrivialCases) {
  EXPECT_EQ(gen_threshold(1, 0).order(), 1u);
  EXPECT_EQ(gen_split(12, 5, std::size_t{0}).edge_count(), 0u);
  EXPECT_EQ(to_graph6(gen_unbalanced_c5_blowup(5, 0)), to_graph6(fx::cycle(5)));
  EXPECT_THROW(gen_unbalanced_c5_blowup(4, 0), PreconditionError);
  EXPECT_THROW(gen_f4_free(0, 0), PreconditionError);
}

TEST(GeneratorTest, SplitGraphShape) {
  Graph g = gen_split(60, 2, std::size_t{20});
  // some 20 vertices form a clique and the other 40 an independent set
  std::vector<std::size_t> deg;
  for (Vertex v = 0; v < 60; ++v) deg.push_back(g.degree(v));
  std::size_t clique_edges = 0, indep_edges = 0;
  VertexSet k(60);
  std::vector<Vertex> order(60);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  for (std::size_t i = 0; i < 20; ++i) k.insert(order[i]);
  for (const Edge& e : g.edges()) {
    if (k.contains(e.u) && k.contains(e.v)) ++clique_edges;
    if (!k.contains(e.u) && !k.contains(e.v)) ++indep_edges;
  }
  EXPECT_EQ(clique_edges, 190u);
  EXPECT_EQ(indep_edges, 0u);
}

TEST(GeneratorTest, OutputsArePatternFree) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (std::size_t n : {5u, 9u, 30u, 200u}) {
      EXPECT_TRUE(is_p5_free(gen_split(n, seed))) << n;
      EXPECT_TRUE(is_p5_free(gen_threshold(n, seed)));
      EXPECT_TRUE(is_p5_free(gen_cograph(n, seed)));
      EXPECT_TRUE(is_p5_free(gen_unbalanced_c5_blowup(n, seed)));
      EXPECT_TRUE(is_p5_free(gen_unbalanced_c5_blowup(n, seed, std::nullopt, Filler::edgeless)));
      EXPECT_TRUE(is_p5_free(gen_substitution(n, seed)));
      EXPECT_FALSE(find_induced_f4(gen_f4_free(n, seed)));
      EXPECT_TRUE(is_cograph(gen_cograph(n, seed), VertexSet::full(n)));
      EXPECT_TRUE(is_cograph(gen_threshold(n, seed), VertexSet::full(n)));
    }
  }
}

TEST(GeneratorTest, SmallOutputsMatchEnumeration) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    EXPECT_FALSE(brute::has_p5(gen_substitution(11, seed)));
    EXPECT_FALSE(brute::has_p5(gen_unbalanced_c5_blowup(11, seed)));
    EXPECT_FALSE(brute::has_p5(gen_split(11, seed)));
    EXPECT_EQ(brute::count_f4(gen_f4_free(11, seed)), 0u);
  }
}

TEST(GeneratorTest, BlowupProfiles) {
  Graph g = gen_unbalanced_c5_blowup(9, 0, std::nullopt, Filler::edgeless);
  EXPECT_TRUE(is_p5_free(g));
  // parts (1,1,1,1,5) joined cyclically: three single edges, then 5 + 5
  EXPECT_EQ(g.edge_count(), 3u + 5u + 5u);
  Graph h = gen_unbalanced_c5_blowup(20, 0, std::vector<std::size_t>{3, 3, 3, 3, 8}, Filler::edgeless);
  EXPECT_EQ(h.edge_count(), 9u * 3 + 24u * 2);
  EXPECT_THROW(gen_unbalanced_c5_blowup(20, 0, std::vector<std::size_t>{3, 3, 3, 3, 3}), PreconditionError);
}

TEST(GeneratorTest, RepairGenerator) {
  auto empty = gen_repair_p5_free(30, 0.0, 1, 10);
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->edge_count(), 0u);
  auto full = gen_repair_p5_free(30, 1.0, 1, 10);
  ASSERT_TRUE(full);
  EXPECT_EQ(full->edge_count(), 435u);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = gen_repair_p5_free(50, 0.2, seed, 100000);
    if (g) { EXPECT_TRUE(is_p5_free(*g)); }
  }
  EXPECT_FALSE(gen_repair_p5_free(50, 0.2, 0, 0));
}

TEST(GeneratorTest, Deterministic) {
  for (const char* name : {"gnp", "cograph", "split", "threshold", "c5_blowup", "f4_free", "substitution", "planted_p5"})
    EXPECT_EQ(to_graph6(generate(name, 70, 9)), to_graph6(generate(name, 70, 9))) << name;
  EXPECT_NE(to_graph6(generate("gnp", 70, 9)), to_graph6(generate("gnp", 70, 10)));
  EXPECT_THROW(generate("nope", 5, 0), ParseError);
}

TEST(SubstituteTest, SizesAndClosure) {
  Graph host = fx::cycle(5), inner = fx::path(4);
  Graph s = substitute(host, 2, inner);
  EXPECT_EQ(s.order(), 8u);
  EXPECT_TRUE(is_p5_free(s));
  EXPECT_THROW(substitute(host, 5, inner), PreconditionError);
  Graph p5 = substitute(fx::path(4), 3, fx::empty(1));
  EXPECT_EQ(to_graph6(p5), to_graph6(fx::path(4)));
}

TEST(PlantTest, PlantedPathIsInduced) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_planted_p5(40, seed);
    EXPECT_FALSE(is_p5_free(g));
  }
  Graph k = plant_p5(fx::complete(7), {6, 2, 4, 0, 1});
  EXPECT_TRUE(verify_p5(k, {{6, 2, 4, 0, 1}}));
}
