#include <random>

#include <gtest/gtest.h>

#include "p5hom/detect.hpp"
#include "p5hom/extract.hpp"
#include "p5hom/generators.hpp"
#include "p5hom/io.hpp"
#include "support/fixtures.hpp"

using namespace p5hom;

namespace {

CographWitness single(std::size_t n, Vertex v) { return {VertexSet(n, {v}), Cotree::leaf(v)}; }

CographWitness whole(const Graph& g, const VertexSet& s) { return {s, *cotree_of(g, s)}; }

}  // namespace

TEST(GrowthTest, Values) {
  GrowthFunction gf;
  EXPECT_EQ(gf.f(1), 1.0L);
  EXPECT_EQ(gf.f(0), 0.0L);
  EXPECT_EQ(gf.f(0.5), 0.0L);
  // (log2 2^64)^(2/3) = 16, so the exponent is exactly 1
  EXPECT_NEAR(static_cast<double>(gf.f(std::exp2(64.0L))), 2.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(gf.f(2000)), 1.2383, 1e-3);
  EXPECT_NEAR(static_cast<double>(gf.eps(256)), 0.5, 1e-15);
  EXPECT_THROW(gf.f(-1), PreconditionError);
  EXPECT_THROW(gf.eps(1), PreconditionError);
  for (long double x = 1; x < 1e6; x *= 1.7) EXPECT_LT(gf.f(x), gf.f(x * 1.7));
}

TEST(GrowthTest, ParseConstant) {
  EXPECT_EQ(parse_growth_constant("1/16"), 1.0L / 16);
  EXPECT_EQ(parse_growth_constant("0.25"), 0.25L);
  EXPECT_THROW(parse_growth_constant("x"), ParseError);
  EXPECT_THROW(parse_growth_constant("1/"), ParseError);
  EXPECT_THROW(parse_growth_constant("-1"), ParseError);
  EXPECT_THROW(parse_growth_constant("0"), ParseError);
}

TEST(CombineTest, PureExamples) {
  Graph two = fx::empty(2);
  auto u = combine_pure(two, single(2, 0), single(2, 1), Color::blue);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(cotree_to_json(u.cotree), json::parse(R"(["union",0,1])"));

  Graph k3 = fx::complete(3);
  CographWitness k2{fx::set(3, {0, 1}), Cotree::node(Cotree::Kind::join_node, {Cotree::leaf(0), Cotree::leaf(1)})};
  auto j = combine_pure(k3, k2, single(3, 2), Color::red);
  EXPECT_EQ(cotree_to_json(j.cotree), json::parse(R"(["join",0,1,2])"));
  EXPECT_THROW(combine_pure(k3, k2, single(3, 2), Color::blue), PreconditionError);
  EXPECT_THROW(combine_pure(k3, k2, single(3, 1), Color::red), PreconditionError);

  Graph g = fx::cliques({2, 2, 2, 2});
  auto left = whole(g, fx::set(8, {0, 1, 2, 3})), right = whole(g, fx::set(8, {4, 5, 6, 7}));
  auto both = combine_pure(g, left, right, Color::blue);
  EXPECT_EQ(both.size(), left.size() + right.size());
  EXPECT_TRUE(verify_cograph(g, both));
  EXPECT_TRUE(is_cograph(g, both.members));
}

TEST(CombineTest, RPartiteExamples) {
  Graph g = fx::multipartite({2, 2, 2});
  std::vector<VertexSet> parts{fx::set(6, {0, 1}), fx::set(6, {2, 3}), fx::set(6, {4, 5})};
  std::vector<CographWitness> inner;
  for (const auto& p : parts) inner.push_back(whole(g, p));
  auto w = combine_r_partite(g, parts, inner, Color::red);
  EXPECT_EQ(w.size(), 6u);
  EXPECT_TRUE(verify_cograph(g, w));
  EXPECT_EQ(to_graph6(realize(w.cotree, 6)), to_graph6(g));

  auto one = combine_r_partite(g, {parts[0]}, {inner[0]}, Color::red);
  EXPECT_EQ(cotree_to_json(one.cotree), cotree_to_json(inner[0].cotree));
  EXPECT_THROW(combine_r_partite(g, {}, {}, Color::red), PreconditionError);
  EXPECT_THROW(combine_r_partite(g, parts, inner, Color::blue), PreconditionError);
}

TEST(CombineTest, BucketedExamples) {
  GrowthFunction gf;
  Graph g = fx::empty(8);
  std::vector<VertexSet> singles;
  for (Vertex v = 0; v < 8; ++v) singles.push_back(VertexSet(8, {v}));
  std::vector<VertexSet> seen;
  auto extractor = [&](const VertexSet& s) {
    seen.push_back(s);
    return CographWitness{s, *cotree_of(g, s)};
  };
  BucketReport rep;
  auto w = combine_bucketed(g, gf, singles, extractor, &rep);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_EQ(seen[0], g.vertices());
  EXPECT_EQ(w.size(), 8u);
  EXPECT_EQ(rep.bucket, 0u);

  seen.clear();
  auto one = combine_bucketed(g, gf, {g.vertices()}, extractor);
  EXPECT_EQ(one.size(), 8u);
  EXPECT_TRUE(verify_cograph(g, one));

  // sizes 2,2,3,3,4,4,5,5 fall in dyadic classes (1,2], (2,4], (4,8]
  Graph h = fx::empty(28);
  std::vector<VertexSet> parts;
  Vertex at = 0;
  for (std::size_t s : {2, 2, 3, 3, 4, 4, 5, 5}) {
    VertexSet p(28);
    for (std::size_t i = 0; i < s; ++i) p.insert(at++);
    parts.push_back(p);
  }
  auto hx = [&](const VertexSet& s) { return CographWitness{s, *cotree_of(h, s)}; };
  auto hw = combine_bucketed(h, gf, parts, hx, &rep);
  EXPECT_EQ(rep.totals, (std::vector<std::size_t>{0, 4, 14, 10}));
  EXPECT_EQ(rep.bucket, 2u);
  EXPECT_EQ(hw.size(), 14u);
  EXPECT_TRUE(verify_cograph(h, hw));

  Graph p4 = fx::path(4);
  EXPECT_THROW(combine_bucketed(p4, gf, {fx::set(4, {0}), fx::set(4, {1, 2})}, hx), PreconditionError);
}

TEST(GoodPairTest, Examples) {
  Graph g = fx::cliques({2, 2});
  auto gp = find_good_pair(g, g.vertices());
  ASSERT_TRUE(gp);
  EXPECT_EQ(gp->a, fx::set(4, {0, 1}));
  EXPECT_EQ(gp->b, fx::set(4, {2, 3}));
  EXPECT_TRUE(is_good_pair(g, g.vertices(), *gp));
  EXPECT_FALSE(find_good_pair(fx::complete(5), VertexSet::full(5)));

  // star centre 0; its complement makes the leaves a triangle and 0 isolated
  Graph star = fx::multipartite({1, 3}).complement();
  auto sp = find_good_pair(star, star.vertices());
  ASSERT_TRUE(sp);
  EXPECT_EQ(sp->a, fx::set(4, {0}));
  EXPECT_EQ(sp->b, fx::set(4, {1, 2, 3}));
}

TEST(GoodPairTest, RandomGraphsGiveValidPairs) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    Graph g = fx::random(25, 0.3 + 0.1 * (it % 5), rng);
    auto gp = find_good_pair(g, g.vertices());
    ASSERT_TRUE(gp);
    EXPECT_TRUE(is_good_pair(g, g.vertices(), *gp));
    EXPECT_FALSE(lex_better(improve_good_pair(g, g.vertices(), *gp), *gp));
  }
}

TEST(PartitionStepTest, PathThroughBothSidesIsReported) {
  // a'=0 - a=1 - v=2 - b=3 - b'=4
  Graph g = fx::path(5);
  GoodPair gp{fx::set(5, {0, 1}), fx::set(5, {3, 4})};
  auto mc = build_partition_step(g, g.vertices(), gp);
  ASSERT_EQ(mc.kind, StepOutcome::Kind::p5);
  EXPECT_EQ(mc.p5->path, (std::array<Vertex, 5>{0, 1, 2, 3, 4}));
}

TEST(PartitionStepTest, MalformedPairIsAnError) {
  Graph g = fx::path(5);
  EXPECT_THROW(build_partition_step(g, g.vertices(), {fx::set(5, {0, 1}), fx::set(5, {2, 3})}), PreconditionError);
}

TEST(PartitionStepTest, BlueToOneSideIsAnImprovement) {
  // A = {0}, B = {1}; vertex 2 is blue to A and red to B
  Graph g = Graph::from_edges(3, {{1, 2}});
  auto mc = build_partition_step(g, g.vertices(), {fx::set(3, {0}), fx::set(3, {1})});
  ASSERT_EQ(mc.kind, StepOutcome::Kind::maximality_violation);
  ASSERT_TRUE(mc.improved);
  EXPECT_TRUE(is_good_pair(g, g.vertices(), *mc.improved));
}

TEST(PartitionStepTest, PartitionsOnSubstitutionGraphs) {
  int partitions = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_substitution(150, seed);
    auto gp = find_good_pair(g, g.vertices());
    ASSERT_TRUE(gp);
    StepOutcome mc;
    for (int guard = 0; guard < 1000; ++guard) {
      mc = build_partition_step(g, g.vertices(), *gp);
      if (mc.kind != StepOutcome::Kind::maximality_violation) break;
      gp = improve_good_pair(g, g.vertices(), *mc.improved);
    }
    ASSERT_NE(mc.kind, StepOutcome::Kind::p5);
    if (mc.kind == StepOutcome::Kind::purepair) {
      EXPECT_TRUE(verify_pair(g, *mc.pure));
      continue;
    }
    ASSERT_EQ(mc.kind, StepOutcome::Kind::partition);
    ++partitions;
    const auto& p = mc.partition;
    EXPECT_EQ(p.a.size() + p.blu.size() + p.red.size() + p.err.size(), 150u);
    EXPECT_EQ(p.a | p.blu | p.red | p.err, g.vertices());
    EXPECT_TRUE(is_pure_pair(g, p.a, p.blu, Color::blue));
    if (!p.red.empty()) { EXPECT_TRUE(is_pure_pair(g, p.a, p.red, Color::red)); }
    EXPECT_LE(p.err.size(), p.a.size());
    std::size_t maxdeg = 0;
    for (Vertex u : p.red) maxdeg = std::max(maxdeg, p.blu.difference_size(g.neighbors(u)));
    EXPECT_EQ(mc.bounds.max_blue_degree, maxdeg);
  }
  EXPECT_GT(partitions, 20);
}

TEST(IterationTest, PartsArePairwisePure) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = gen_substitution(200, seed);
    auto it = run_iteration(g, g.vertices());
    EXPECT_FALSE(it.p5);
    for (std::size_t i = 0; i < it.steps.size(); ++i) {
      EXPECT_LE(it.steps[i].part.err.size(), it.steps[i].part.a.size());
      for (std::size_t j = i + 1; j < it.steps.size(); ++j)
        EXPECT_NE(pair_color(g, it.steps[i].part.a, it.steps[j].part.a), PairColor::mixed);
    }
    if (it.pure) { EXPECT_TRUE(verify_pair(g, *it.pure)); }
  }
}

TEST(ExtractTest, CographIsReturnedWhole) {
  Graph g = gen_cograph(300, 4);
  auto r = extract_cograph(g);
  EXPECT_EQ(r.cograph.members, g.vertices());
  EXPECT_TRUE(r.trace.short_circuit);
}

TEST(ExtractTest, UnbalancedBlowupKeepsTheBigPart) {
  for (std::size_t n : {9u, 40u, 200u}) {
    Graph g = gen_unbalanced_c5_blowup(n, 1, std::nullopt, Filler::edgeless);
    auto r = extract_cograph(g);
    EXPECT_TRUE(verify_cograph(g, r.cograph));
    EXPECT_GE(r.cograph.size(), n - 4);
    EXPECT_FALSE(r.p5);
  }
}

TEST(ExtractTest, SplitGraphMeetsTheFloors) {
  Graph g = gen_split(500, 3);
  auto r = extract_cograph(g);
  EXPECT_TRUE(verify_cograph(g, r.cograph));
  const auto floor = std::max<std::size_t>(std::ceil(GrowthFunction{}.f(500)), es_floor(500));
  EXPECT_GE(r.cograph.size(), floor);
}

TEST(ExtractTest, SmallGraphsAreExact) {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 40; ++it) {
    Graph g = fx::random(1 + rng() % 16, 0.5, rng);
    EXPECT_EQ(extract_cograph(g).cograph.size(), largest_cograph_exact(g).size());
  }
}

TEST(ExtractTest, PlantedPathMayBeReportedButOutputStaysValid) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_planted_p5(120, seed);
    auto r = extract_cograph(g);
    EXPECT_TRUE(verify_cograph(g, r.cograph));
    if (r.p5) { EXPECT_TRUE(verify_p5(g, *r.p5)); }
  }
}

TEST(ExtractTest, EmptyInputIsAnError) {
  EXPECT_THROW(extract_cograph(Graph(0)), PreconditionError);
}
