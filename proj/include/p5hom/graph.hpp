#pragma once

// Immutable simple undirected graph with packed adjacency rows, plus the
// vertex-set predicates every other module is written against.
//
// Colour convention: an edge of the graph is "red", a non-edge is "blue".

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "p5hom/error.hpp"
#include "p5hom/vertex_set.hpp"

namespace p5hom {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class Color { red, blue };
enum class PairColor { red, blue, mixed };
enum class Consistency { red, blue, inconsistent };

inline Color opposite(Color c) { return c == Color::red ? Color::blue : Color::red; }
inline const char* to_string(Color c) { return c == Color::red ? "red" : "blue"; }

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.connect(e.u, e.v);
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return rows_.size(); }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total / 2;
  }

  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

  bool has_color(Vertex u, Vertex v, Color c) const {
    return u != v && adjacent(u, v) == (c == Color::red);
  }

  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }

  // Non-neighbours of v, excluding v itself.
  VertexSet non_neighbors(Vertex v) const {
    VertexSet out = rows_.at(v).complement();
    out.erase(v);
    return out;
  }

  VertexSet colored_neighbors(Vertex v, Color c) const {
    return c == Color::red ? rows_.at(v) : non_neighbors(v);
  }

  std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = rows_[u].next(u + 1); v != no_vertex; v = rows_[u].next(v + 1))
        out.push_back({u, v});
    return out;
  }

  Graph complement() const {
    Graph g(order());
    for (Vertex v = 0; v < order(); ++v) g.rows_[v] = non_neighbors(v);
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;

  void connect(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loops are not allowed");
    rows_[u].insert(v);
    rows_[v].insert(u);
  }

  std::vector<VertexSet> rows_;
};

// Mutable companion used by generators; produces an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  std::size_t order() const { return g_.order(); }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    g_.connect(u, v);
    return *this;
  }
  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    g_.rows_.at(u).erase(v);
    g_.rows_.at(v).erase(u);
    return *this;
  }
  // Makes every vertex of a adjacent to every vertex of b (a, b disjoint).
  GraphBuilder& join(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a)
      for (Vertex v : b) add_edge(u, v);
    return *this;
  }

  Graph build() && { return std::move(g_); }
  const Graph& view() const { return g_; }

 private:
  Graph g_;
};

// ---------------------------------------------------------------------------
// Induced subgraphs

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> labels;  // labels[i] = original label of vertex i

  VertexSet lift(const VertexSet& local, std::size_t parent_order) const {
    VertexSet out(parent_order);
    for (Vertex v : local) out.insert(labels[v]);
    return out;
  }
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw PreconditionError("vertex set does not belong to graph");
  InducedSubgraph out{Graph(s.size()), s.to_vector()};
  std::vector<Vertex> local(g.order(), no_vertex);
  for (Vertex i = 0; i < out.labels.size(); ++i) local[out.labels[i]] = i;
  GraphBuilder b(out.labels.size());
  for (Vertex i = 0; i < out.labels.size(); ++i) {
    const VertexSet& row = g.neighbors(out.labels[i]);
    for (Vertex w = row.first_common(s); w != no_vertex; w = row.next(w + 1)) {
      if (!s.contains(w)) continue;
      if (local[w] > i) b.add_edge(i, local[w]);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity

// Maximal connected pieces of `within` under red (edges) or blue (non-edges)
// adjacency, ordered by smallest member.
// Calls visit(component) for each `color`-component of `within` in order of
// least vertex; stops early when visit returns false. The component buffer is
// reused between calls.
template <class Visit>
void for_each_component(const Graph& g, const VertexSet& within, Color color, Visit&& visit) {
  VertexSet unvisited = within;
  VertexSet comp(g.order()), frontier(g.order()), reach(g.order()), red_to_all(g.order());
  while (!unvisited.empty()) {
    const Vertex seed = unvisited.first();
    unvisited.erase(seed);
    comp.clear();
    comp.insert(seed);
    frontier.clear();
    frontier.insert(seed);
    while (!frontier.empty()) {
      if (color == Color::red) {
        reach.clear();
        for (Vertex f : frontier) reach |= g.neighbors(f);
        reach &= unvisited;
      } else {
        // A vertex is blue-reachable unless it is red to every frontier vertex.
        red_to_all = unvisited;
        for (Vertex f : frontier) {
          red_to_all &= g.neighbors(f);
          if (red_to_all.empty()) break;
        }
        reach = unvisited;
        reach -= red_to_all;
      }
      unvisited -= reach;
      comp |= reach;
      std::swap(frontier, reach);
    }
    if (!visit(static_cast<const VertexSet&>(comp))) return;
  }
}

inline std::vector<VertexSet> components(const Graph& g, const VertexSet& within, Color color) {
  std::vector<VertexSet> out;
  for_each_component(g, within, color, [&](const VertexSet& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

inline bool is_connected(const Graph& g, const VertexSet& s, Color color) {
  if (s.empty()) return false;
  return components(g, s, color).size() == 1;
}

// Largest component; ties go to the one with the smaller minimum label.
inline VertexSet largest_component(const Graph& g, const VertexSet& s, Color color) {
  VertexSet best(g.order());
  std::size_t best_size = 0;
  for_each_component(g, s, color, [&](const VertexSet& c) {
    const std::size_t k = c.size();
    if (k > best_size) best = c, best_size = k;
    return best_size * 2 <= s.size();
  });
  return best;
}

// First component (by least vertex) with more than k vertices.
inline std::optional<VertexSet> component_larger_than(const Graph& g, const VertexSet& s, Color color, std::size_t k) {
  std::optional<VertexSet> out;
  if (s.size() <= k) return out;
  VertexSet pool = s;
  if (color == Color::red && k >= 1) {
    // Only vertices with a red neighbour in s can sit in a component of size > 1.
    VertexSet touched(g.order());
    for (Vertex v : s) touched |= g.neighbors(v);
    pool &= touched;
    if (pool.size() <= k) return out;
  }
  for_each_component(g, pool, color, [&](const VertexSet& c) {
    if (c.size() > k) out = c;
    return !out;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Purity and consistency

inline PairColor pair_color(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.empty() || t.empty()) throw PreconditionError("pair_color needs two nonempty sets");
  if (s.intersects(t)) throw PreconditionError("pair_color needs disjoint sets");
  bool any_red = false, any_blue = false;
  const std::size_t t_size = t.size();
  for (Vertex v : s) {
    std::size_t common = g.neighbors(v).intersection_size(t);
    if (common > 0) any_red = true;
    if (common < t_size) any_blue = true;
    if (any_red && any_blue) return PairColor::mixed;
  }
  return any_red ? PairColor::red : PairColor::blue;
}

inline bool is_pure_pair(const Graph& g, const VertexSet& s, const VertexSet& t, Color c) {
  return pair_color(g, s, t) == (c == Color::red ? PairColor::red : PairColor::blue);
}

inline Consistency is_consistent(const Graph& g, Vertex v, const VertexSet& s) {
  if (s.contains(v)) throw PreconditionError("is_consistent: vertex belongs to the set");
  if (s.empty()) throw PreconditionError("is_consistent: empty set");
  std::size_t common = g.neighbors(v).intersection_size(s);
  if (common == 0) return Consistency::blue;
  if (common == s.size()) return Consistency::red;
  return Consistency::inconsistent;
}

// Given c connected in `color` and v outside c seeing both colours towards c,
// returns (u, w) in c with v-w and u-w of `color` and v-u of the opposite
// colour. Any `color` path inside c between the two kinds of vertex switches
// kind somewhere; the switch is the witness. Smallest w, then smallest u.
inline std::pair<Vertex, Vertex> mixed_witness(const Graph& g, Vertex v, const VertexSet& c,
                                               Color color = Color::red) {
  if (c.contains(v)) throw PreconditionError("mixed_witness: vertex belongs to the set");
  if (c.size() < 2) throw PreconditionError("mixed_witness: set must have at least two vertices");
  if (is_consistent(g, v, c) != Consistency::inconsistent)
    throw PreconditionError("mixed_witness: vertex is consistent to the set");

  VertexSet same = g.colored_neighbors(v, color) & c;
  VertexSet other = c - same;
  for (Vertex w : same) {
    Vertex u = g.colored_neighbors(w, color).first_common(other);
    if (u != no_vertex) return {u, w};
  }
  throw PreconditionError("mixed_witness: set is not connected in the requested colour");
}

// ---------------------------------------------------------------------------
// Pair witnesses and the one-third split

struct PairWitness {
  VertexSet left;
  VertexSet right;
  Color color = Color::blue;

  bool operator==(const PairWitness&) const = default;
};

inline bool verify_pair(const Graph& g, const PairWitness& p) {
  if (p.left.empty() || p.right.empty() || p.left.intersects(p.right)) return false;
  return is_pure_pair(g, p.left, p.right, p.color);
}

// If the largest red component of g[s] has more than |s|/3 vertices it is
// returned; otherwise red components are grouped greedily, in order of their
// smallest label, into a blue pair with both sides of at least |s|/3.
inline std::variant<PairWitness, VertexSet> one_third_split(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("one_third_split: empty set");
  auto comps = components(g, s, Color::red);
  const std::size_t n = s.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;
  if (3 * comps[best].size() > n) return comps[best];

  PairWitness out{VertexSet(g.order()), VertexSet(g.order()), Color::blue};
  std::size_t i = 0, taken = 0;
  for (; i < comps.size() && 3 * taken < n; ++i) {
    out.left |= comps[i];
    taken += comps[i].size();
  }
  for (; i < comps.size(); ++i) out.right |= comps[i];
  return out;
}

}  // namespace p5hom
