#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "p5hom/graph.hpp"

namespace fx {

using p5hom::Edge;
using p5hom::Graph;
using p5hom::Vertex;
using p5hom::VertexSet;

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

inline Graph empty(std::size_t n) { return Graph(n); }

// Disjoint union of cliques with the given sizes.
inline Graph cliques(const std::vector<std::size_t>& sizes) {
  std::size_t n = 0;
  for (auto s : sizes) n += s;
  std::vector<Edge> e;
  Vertex at = 0;
  for (auto s : sizes) {
    for (Vertex i = 0; i < s; ++i)
      for (Vertex j = i + 1; j < s; ++j) e.push_back({at + i, at + j});
    at += static_cast<Vertex>(s);
  }
  return Graph::from_edges(n, e);
}

// Complete multipartite graph with the given part sizes.
inline Graph multipartite(const std::vector<std::size_t>& sizes) {
  return cliques(sizes).complement();
}

// Edge set read from the bits of `mask` in (0,1), (0,2), (1,2), (0,3), ... order.
inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (mask >> bit & 1) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

inline Graph random(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

inline VertexSet set(std::size_t n, std::initializer_list<Vertex> v) { return VertexSet(n, v); }

}  // namespace fx
