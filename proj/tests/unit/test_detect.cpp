#include <random>

#include <gtest/gtest.h>

#include "p5hom/detect.hpp"
#include "p5hom/io.hpp"
#include "p5hom/oracle.hpp"
#include "p5hom/witness.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace p5hom;

TEST(FindP5Test, PathCycleLongerPath) {
  auto p = find_induced_p5(fx::path(5));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->path, (std::array<Vertex, 5>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(find_induced_p5(fx::cycle(5)));
  auto q = find_induced_p5(fx::path(6));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->path, (std::array<Vertex, 5>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(verify_p5(fx::path(6), *q));
}

TEST(FindP5Test, LeastWitnessMatchesEnumeration) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 400; ++it) {
    Graph g = fx::random(5 + rng() % 5, 0.3 + 0.1 * (it % 4), rng);
    auto got = find_induced_p5(g);
    auto want = brute::least_p5(g);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) { EXPECT_EQ(got->path, *want); }
    EXPECT_EQ(find_any_induced_p5(g).has_value(), want.has_value());
  }
}

TEST(FindF4Test, Examples) {
  Graph p3k1 = Graph::from_edges(4, {{0, 1}, {1, 2}});
  auto w = find_induced_f4(p3k1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::array<Vertex, 4>{0, 1, 2, 3}));
  EXPECT_FALSE(find_induced_f4(fx::cliques({3, 4, 1, 2})));
  auto v = find_induced_f4(fx::path(5));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->vertices, (std::array<Vertex, 4>{0, 1, 2, 4}));
}

TEST(F4CountTest, Examples) {
  Graph p3k1 = Graph::from_edges(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(count_f4_total(p3k1), 1u);
  EXPECT_EQ(count_f4_total(fx::complete(4)), 0u);
  EXPECT_EQ(count_f4_total(fx::path(5)), brute::count_f4(fx::path(5)));
  EXPECT_EQ(count_f4_on_edge(p3k1, {0, 1}), 1u);
  EXPECT_EQ(count_f4_on_edge(fx::complete(4), {2, 3}), 0u);
  EXPECT_THROW(count_f4_on_edge(p3k1, {0, 2}), PreconditionError);
}

TEST(F4CountTest, PerEdgeAttribution) {
  // The per-edge count is exactly the number of F4 copies holding both ends.
  std::mt19937_64 rng(4);
  for (int it = 0; it < 150; ++it) {
    Graph g = fx::random(6 + rng() % 7, 0.45, rng);
    std::uint64_t sum = 0;
    for (const Edge& e : g.edges()) {
      const auto c = count_f4_on_edge(g, e);
      EXPECT_EQ(c, brute::count_f4_containing(g, e.u, e.v));
      sum += c;
    }
    EXPECT_EQ(sum, 2 * brute::count_f4(g));
  }
}

TEST(EdgeNeighborhoodTest, Examples) {
  Graph p3k1 = Graph::from_edges(4, {{0, 1}, {1, 2}});
  auto p = edge_neighborhoods(p3k1, {0, 1});
  EXPECT_EQ(p.n00, fx::set(4, {3}));
  EXPECT_EQ(p.n01, fx::set(4, {2}));
  EXPECT_TRUE(p.n11.empty());

  Graph two = fx::cliques({2, 2});
  auto q = edge_neighborhoods(two, {0, 2});
  EXPECT_TRUE(q.n00.empty());
  EXPECT_EQ(q.n01, fx::set(4, {1, 3}));

  Graph star = fx::multipartite({1, 3});
  auto r = edge_neighborhoods(star, {0, 1});
  EXPECT_EQ(r.n01, fx::set(4, {2, 3}));
  EXPECT_TRUE(r.n00.empty() && r.n11.empty());
}

TEST(EdgeNeighborhoodTest, PartitionsTheRest) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 100; ++it) {
    Graph g = fx::random(15, 0.5, rng);
    const Vertex x = rng() % 15, y = (x + 1 + rng() % 14) % 15;
    auto p = edge_neighborhoods(g, {x, y});
    VertexSet all = p.n00 | p.n11 | p.n01;
    all.insert(x);
    all.insert(y);
    EXPECT_EQ(all, g.vertices());
    EXPECT_EQ(p.n00.size() + p.n11.size() + p.n01.size() + 2, 15u);
    for (Vertex v : p.n01) EXPECT_NE(g.adjacent(v, x), g.adjacent(v, y));
    for (Vertex v : p.n11) EXPECT_TRUE(g.adjacent(v, x) && g.adjacent(v, y));
    for (Vertex v : p.n00) EXPECT_FALSE(g.adjacent(v, x) || g.adjacent(v, y));
  }
}

TEST(CographTest, Examples) {
  auto k3 = cograph_recognize(fx::complete(3));
  ASSERT_TRUE(std::holds_alternative<Cotree>(k3));
  EXPECT_EQ(cotree_to_json(std::get<Cotree>(k3)), json::parse(R"(["join",0,1,2])"));

  auto p4 = cograph_recognize(fx::path(4));
  ASSERT_TRUE(std::holds_alternative<P4Witness>(p4));
  EXPECT_TRUE(verify_p4(fx::path(4), std::get<P4Witness>(p4)));

  auto two = cograph_recognize(fx::cliques({2, 2}));
  ASSERT_TRUE(std::holds_alternative<Cotree>(two));
  EXPECT_EQ(cotree_to_json(std::get<Cotree>(two)), json::parse(R"(["union",["join",0,1],["join",2,3]])"));
}

TEST(CographTest, CotreeRealizesTheGraphAndIsCanonical) {
  std::mt19937_64 rng(12);
  int cographs = 0;
  for (int it = 0; it < 500; ++it) {
    Graph g = fx::random(3 + rng() % 8, 0.5, rng);
    auto r = cograph_recognize(g);
    EXPECT_EQ(std::holds_alternative<Cotree>(r), !brute::has_p4(g));
    if (auto* t = std::get_if<Cotree>(&r)) {
      ++cographs;
      EXPECT_EQ(to_graph6(realize(*t, g.order())), to_graph6(g));
      // alternating labels, children ordered by least leaf
      auto check = [&](auto&& self, const Cotree& node) -> void {
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          const auto& c = node.children[i];
          if (!c.is_leaf()) { EXPECT_NE(c.kind, node.kind); }
          if (i) { EXPECT_LT(node.children[i - 1].min_leaf(), c.min_leaf()); }
          self(self, c);
        }
      };
      check(check, *t);
    } else {
      EXPECT_TRUE(verify_p4(g, std::get<P4Witness>(r)));
    }
  }
  EXPECT_GT(cographs, 50);
}

TEST(EsFloorTest, Values) {
  EXPECT_EQ(es_floor(1), 0u);
  EXPECT_EQ(es_floor(2), 1u);
  EXPECT_EQ(es_floor(16), 2u);
  EXPECT_EQ(es_floor(17), 3u);
  EXPECT_EQ(es_floor(1024), 5u);
}

TEST(HomExactTest, Examples) {
  auto p5 = hom_exact(fx::path(5));
  EXPECT_EQ(p5.kind, HomWitness::Kind::independent);
  EXPECT_EQ(p5.members, fx::set(5, {0, 2, 4}));
  EXPECT_EQ(hom_exact(fx::cycle(5)).size(), 2u);
  auto k7 = hom_exact(fx::complete(7));
  EXPECT_EQ(k7.kind, HomWitness::Kind::clique);
  EXPECT_EQ(k7.size(), 7u);
  EXPECT_THROW(hom_exact(fx::empty(65)), LimitError);
  EXPECT_THROW(hom_by_subsets(fx::empty(21)), LimitError);
}

TEST(HomExactTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    Graph g = fx::random(1 + rng() % 11, 0.5, rng);
    auto h = hom_exact(g);
    EXPECT_TRUE(verify_hom(g, h));
    EXPECT_EQ(h.size(), brute::hom(g));
    EXPECT_EQ(hom_by_subsets(g).size(), h.size());
    EXPECT_GE(h.size(), es_floor(g.order()));
  }
}

TEST(LargestCographTest, Examples) {
  EXPECT_EQ(largest_cograph_exact(fx::path(4)).size(), 3u);
  Graph two = fx::cliques({2, 3});
  EXPECT_EQ(largest_cograph_exact(two).members, two.vertices());
  auto p5 = largest_cograph_exact(fx::path(5));
  EXPECT_EQ(p5.size(), 4u);
  EXPECT_TRUE(verify_cograph(fx::path(5), p5));
  EXPECT_THROW(largest_cograph_exact(fx::empty(17)), LimitError);
}

TEST(LargestCographTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 120; ++it) {
    Graph g = fx::random(1 + rng() % 12, 0.5, rng);
    auto w = largest_cograph_exact(g);
    EXPECT_TRUE(verify_cograph(g, w));
    EXPECT_EQ(w.size(), brute::largest_cograph(g));
  }
}

TEST(LimitsTest, Parsing) {
  auto l = parse_limits("hom=32,cograph=12");
  EXPECT_EQ(l.hom, 32u);
  EXPECT_EQ(l.cograph, 12u);
  EXPECT_EQ(l.subsets, OracleLimits{}.subsets);
  EXPECT_THROW(parse_limits("hom"), ParseError);
  EXPECT_THROW(parse_limits("speed=3"), ParseError);
}

TEST(WitnessTest, RejectsWrongCertificates) {
  Graph g = fx::path(5);
  EXPECT_FALSE(verify_p5(g, {{0, 1, 2, 4, 3}}));
  EXPECT_FALSE(verify_p5(g, {{0, 1, 2, 3, 3}}));
  EXPECT_FALSE(verify_f4(g, {{0, 1, 2, 3}}));
  EXPECT_FALSE(verify_hom(g, {fx::set(5, {0, 1}), HomWitness::Kind::independent}));
  CographWitness bad{fx::set(5, {0, 1, 2, 3}), Cotree::node(Cotree::Kind::union_node,
                                                            {Cotree::leaf(0), Cotree::leaf(1), Cotree::leaf(2),
                                                             Cotree::leaf(3)})};
  EXPECT_FALSE(verify_cograph(g, bad));
}
