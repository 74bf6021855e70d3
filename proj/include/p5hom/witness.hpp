#pragma once

// Certificate types and their checks. Every check here relies only on
// adjacency queries and pair purity, never on the algorithms that produced
// the certificate.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "p5hom/cotree.hpp"
#include "p5hom/graph.hpp"

namespace p5hom {

// v1..v5 with exactly the four path edges among the ten pairs.
struct P5Witness {
  std::array<Vertex, 5> path{};
  bool operator==(const P5Witness&) const = default;
};

// (a, b, c, d): a-b-c is an induced path and d sees none of a, b, c.
struct F4Witness {
  std::array<Vertex, 4> vertices{};
  bool operator==(const F4Witness&) const = default;
};

struct P4Witness {
  std::array<Vertex, 4> path{};
  bool operator==(const P4Witness&) const = default;
};

struct HomWitness {
  enum class Kind { clique, independent };
  VertexSet members;
  Kind kind = Kind::clique;

  std::size_t size() const { return members.size(); }
};

struct CographWitness {
  VertexSet members;
  Cotree cotree;

  std::size_t size() const { return members.size(); }
};

namespace detail {

template <std::size_t N>
bool distinct_in_range(const Graph& g, const std::array<Vertex, N>& vs) {
  for (std::size_t i = 0; i < N; ++i) {
    if (vs[i] >= g.order()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j]) return false;
  }
  return true;
}

template <std::size_t N>
bool is_induced_path(const Graph& g, const std::array<Vertex, N>& path) {
  if (!distinct_in_range(g, path)) return false;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
  return true;
}

}  // namespace detail

inline bool verify_p5(const Graph& g, const P5Witness& w) { return detail::is_induced_path(g, w.path); }
inline bool verify_p4(const Graph& g, const P4Witness& w) { return detail::is_induced_path(g, w.path); }

inline bool verify_f4(const Graph& g, const F4Witness& w) {
  const auto& v = w.vertices;
  if (!detail::distinct_in_range(g, v)) return false;
  return g.adjacent(v[0], v[1]) && g.adjacent(v[1], v[2]) && !g.adjacent(v[0], v[2]) &&
         !g.adjacent(v[3], v[0]) && !g.adjacent(v[3], v[1]) && !g.adjacent(v[3], v[2]);
}

inline bool verify_hom(const Graph& g, const HomWitness& w) {
  if (w.members.universe() != g.order() || w.members.empty()) return false;
  const bool want_edges = w.kind == HomWitness::Kind::clique;
  for (Vertex v : w.members) {
    std::size_t common = g.neighbors(v).intersection_size(w.members);
    if (common != (want_edges ? w.members.size() - 1 : 0)) return false;
  }
  return true;
}

namespace detail {

// Checks the subtree and fills `leaves`; false on any violation.
inline bool check_cotree(const Graph& g, const Cotree& t, VertexSet& leaves) {
  if (t.is_leaf()) {
    if (t.vertex >= g.order() || leaves.contains(t.vertex)) return false;
    leaves.insert(t.vertex);
    return true;
  }
  if (t.children.size() < 2) return false;
  const Color color = t.kind == Cotree::Kind::join_node ? Color::red : Color::blue;
  std::vector<VertexSet> parts;
  VertexSet here(g.order());
  for (const auto& c : t.children) {
    VertexSet part(g.order());
    if (!check_cotree(g, c, part)) return false;
    if (part.intersects(here) || part.intersects(leaves)) return false;
    here |= part;
    parts.push_back(std::move(part));
  }
  // Children pairwise pure in `color`: every vertex sees the rest of this
  // node's leaves entirely in that colour.
  for (const auto& part : parts) {
    VertexSet rest = here - part;
    const std::size_t need = color == Color::red ? rest.size() : 0;
    for (Vertex v : part)
      if (g.neighbors(v).intersection_size(rest) != need) return false;
  }
  leaves |= here;
  return true;
}

}  // namespace detail

// True when the cotree's leaves are exactly the members and the cotree
// realizes g[members].
inline bool verify_cograph(const Graph& g, const CographWitness& w) {
  if (w.members.universe() != g.order() || w.members.empty()) return false;
  VertexSet leaves(g.order());
  if (!detail::check_cotree(g, w.cotree, leaves)) return false;
  return leaves == w.members;
}

}  // namespace p5hom
