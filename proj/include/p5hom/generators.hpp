#pragma once

// Seeded instance generators. Everything P5-free here is built by
// substituting P5-free graphs into P5-free hosts.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "p5hom/cotree.hpp"
#include "p5hom/detect.hpp"
#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"

namespace p5hom {

using Rng = std::mt19937_64;

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

// Random composition of n into k positive parts.
inline std::vector<std::size_t> random_composition(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return sizes;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

inline Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// Copies h onto the labels offset..offset+|h|-1 of the builder.
inline void place(GraphBuilder& b, const Graph& h, std::size_t offset) {
  for (const Edge& e : h.edges()) b.add_edge(static_cast<Vertex>(offset + e.u), static_cast<Vertex>(offset + e.v));
}

}  // namespace detail

inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw PreconditionError("gnp: p must lie in [0, 1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (detail::coin(rng, p)) b.add_edge(u, v);
  return std::move(b).build();
}

// Host vertices other than v keep their relative order; the inner copy
// follows them. Every inner vertex sees exactly the host neighbours of v.
inline Graph substitute(const Graph& host, Vertex v, const Graph& inner) {
  if (v >= host.order()) throw PreconditionError("substitute: vertex outside the host");
  const std::size_t h = host.order(), k = inner.order();
  auto map = [&](Vertex u) { return u < v ? u : u - 1; };
  GraphBuilder b(h - 1 + k);
  for (const Edge& e : host.edges())
    if (e.u != v && e.v != v) b.add_edge(map(e.u), map(e.v));
  detail::place(b, inner, h - 1);
  for (Vertex u : host.neighbors(v))
    for (Vertex i = 0; i < k; ++i) b.add_edge(map(u), static_cast<Vertex>(h - 1 + i));
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Cographs, split and threshold graphs

inline Cotree random_cotree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("random_cotree: n must be positive");
  Rng rng(seed);
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), Vertex{0});
  std::shuffle(labels.begin(), labels.end(), rng);
  auto build = [&](auto&& self, std::size_t lo, std::size_t hi, Cotree::Kind kind) -> Cotree {
    if (hi - lo == 1) return Cotree::leaf(labels[lo]);
    const std::size_t k = detail::uniform(rng, 2, std::min<std::size_t>(4, hi - lo));
    const auto sizes = detail::random_composition(rng, hi - lo, k);
    const auto other = kind == Cotree::Kind::join_node ? Cotree::Kind::union_node : Cotree::Kind::join_node;
    std::vector<Cotree> kids;
    std::size_t at = lo;
    for (std::size_t s : sizes) {
      kids.push_back(self(self, at, at + s, other));
      at += s;
    }
    return Cotree::node(kind, std::move(kids));
  };
  return build(build, 0, n, detail::coin(rng, 0.5) ? Cotree::Kind::join_node : Cotree::Kind::union_node);
}

inline Graph gen_cograph(std::size_t n, std::uint64_t seed) { return realize(random_cotree(n, seed), n); }

// Clique side of size k (random when absent), independent side of n-k,
// cross pairs joined with probability p.
inline Graph gen_split(std::size_t n, std::uint64_t seed, std::optional<std::size_t> clique_size = std::nullopt,
                       double p = 0.5) {
  Rng rng(seed);
  const std::size_t k = clique_size ? *clique_size : detail::uniform(rng, 0, n);
  if (k > n) throw PreconditionError("gen_split: clique side larger than n");
  GraphBuilder b(n);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) b.add_edge(u, v);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = static_cast<Vertex>(k); v < n; ++v)
      if (detail::coin(rng, p)) b.add_edge(u, v);
  return detail::shuffled(std::move(b).build(), rng);
}

// Vertices added one at a time, each isolated or dominating.
inline Graph gen_threshold(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v)
    if (detail::coin(rng, 0.5))
      for (Vertex u = 0; u < v; ++u) b.add_edge(u, v);
  return detail::shuffled(std::move(b).build(), rng);
}

// ---------------------------------------------------------------------------
// Substitution families

enum class Filler { edgeless, cograph };

inline Graph filler_graph(std::size_t n, Filler fill, std::uint64_t seed) {
  if (fill == Filler::edgeless) return Graph(n);
  return gen_cograph(n, seed);
}

// Parts joined cyclically, part i completely to part i+1 (mod 5). Default
// profile (1, 1, 1, 1, n-4).
inline Graph gen_unbalanced_c5_blowup(std::size_t n, std::uint64_t seed,
                                      std::optional<std::vector<std::size_t>> profile = std::nullopt,
                                      Filler fill = Filler::cograph) {
  if (n < 5) throw PreconditionError("c5 blow-up: n must be at least 5");
  std::vector<std::size_t> sizes = profile ? *profile : std::vector<std::size_t>{1, 1, 1, 1, n - 4};
  if (sizes.size() != 5 || std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) != n ||
      std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end())
    throw PreconditionError("c5 blow-up: profile must be five positive sizes summing to n");
  Rng rng(seed);
  GraphBuilder b(n);
  std::vector<std::vector<Vertex>> parts(5);
  std::size_t at = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    detail::place(b, filler_graph(sizes[i], fill, rng()), at);
    for (std::size_t j = 0; j < sizes[i]; ++j) parts[i].push_back(static_cast<Vertex>(at + j));
    at += sizes[i];
  }
  for (std::size_t i = 0; i < 5; ++i) b.join(parts[i], parts[(i + 1) % 5]);
  return std::move(b).build();
}

// Disjoint unions of cliques and joins of smaller F4-free graphs.
inline Graph gen_f4_free(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("gen_f4_free: n must be positive");
  Rng rng(seed);
  auto build = [&](auto&& self, std::size_t size, int depth) -> Graph {
    GraphBuilder b(size);
    if (size == 1) return std::move(b).build();
    if (depth >= 3 || detail::coin(rng, 0.5)) {
      const auto parts = detail::random_composition(rng, size, detail::uniform(rng, 1, std::min<std::size_t>(size, 6)));
      std::size_t at = 0;
      for (std::size_t s : parts) {
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = i + 1; j < s; ++j) b.add_edge(static_cast<Vertex>(at + i), static_cast<Vertex>(at + j));
        at += s;
      }
      return std::move(b).build();
    }
    const auto parts = detail::random_composition(rng, size, detail::uniform(rng, 2, std::min<std::size_t>(size, 4)));
    std::vector<std::vector<Vertex>> blocks;
    std::size_t at = 0;
    for (std::size_t s : parts) {
      detail::place(b, self(self, s, depth + 1), at);
      blocks.emplace_back();
      for (std::size_t i = 0; i < s; ++i) blocks.back().push_back(static_cast<Vertex>(at + i));
      at += s;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j) b.join(blocks[i], blocks[j]);
    return std::move(b).build();
  };
  return detail::shuffled(build(build, n, 0), rng);
}

// Random P5-free host on 2..max_host vertices (rejection sampling).
inline Graph random_p5_free_host(Rng& rng, std::size_t max_host = 6) {
  while (true) {
    const std::size_t k = detail::uniform(rng, 2, std::max<std::size_t>(2, max_host));
    Graph h = gnp(k, 0.5, rng());
    if (k < 5 || is_p5_free(h)) return h;
  }
}

// Substitution tree: a random P5-free host whose vertices are replaced by
// recursively generated modules, each module a contiguous label block.
inline Graph gen_substitution(std::size_t n, std::uint64_t seed, std::size_t max_host = 6) {
  if (n == 0) throw PreconditionError("gen_substitution: n must be positive");
  Rng rng(seed);
  GraphBuilder b(n);
  auto build = [&](auto&& self, std::size_t offset, std::size_t size) -> void {
    if (size == 1) return;
    Graph host = random_p5_free_host(rng, std::min(max_host, size));
    const auto sizes = detail::random_composition(rng, size, host.order());
    std::vector<std::vector<Vertex>> blocks;
    std::size_t at = offset;
    for (std::size_t s : sizes) {
      self(self, at, s);
      blocks.emplace_back();
      for (std::size_t i = 0; i < s; ++i) blocks.back().push_back(static_cast<Vertex>(at + i));
      at += s;
    }
    for (const Edge& e : host.edges()) b.join(blocks[e.u], blocks[e.v]);
  };
  build(build, 0, n);
  return detail::shuffled(std::move(b).build(), rng);
}

// G(n, p), then the middle edge of a found P5 is deleted until none is left.
inline std::optional<Graph> gen_repair_p5_free(std::size_t n, double p, std::uint64_t seed, std::size_t max_iters) {
  GraphBuilder b(gnp(n, p, seed));
  for (std::size_t it = 0;; ++it) {
    auto w = find_any_induced_p5(b.view());
    if (!w) return std::move(b).build();
    if (it >= max_iters) return std::nullopt;
    b.remove_edge(w->path[1], w->path[2]);
  }
}

// Forces the five given vertices to induce the path w'-u'-v-x-y (in that
// order); the rest of the graph is untouched.
inline Graph plant_p5(const Graph& g, const std::array<Vertex, 5>& path) {
  GraphBuilder b(g);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      b.remove_edge(path[i], path[j]);
      if (j == i + 1) b.add_edge(path[i], path[j]);
    }
  return std::move(b).build();
}

// A P5-free substitution graph with a P5 planted on five random vertices.
inline Graph gen_planted_p5(std::size_t n, std::uint64_t seed) {
  if (n < 5) throw PreconditionError("gen_planted_p5: n must be at least 5");
  Rng rng(seed);
  Graph host = gen_substitution(n, rng());
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::shuffle(all.begin(), all.end(), rng);
  return plant_p5(host, {all[0], all[1], all[2], all[3], all[4]});
}

}  // namespace p5hom
