#pragma once

// Exact homogeneous-set and largest-cograph oracles for small graphs, plus
// the greedy homogeneous-set estimate used above those sizes.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "p5hom/cotree.hpp"
#include "p5hom/detect.hpp"
#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"
#include "p5hom/witness.hpp"

namespace p5hom {

struct OracleLimits {
  std::size_t hom = 64;
  std::size_t subsets = 20;
  std::size_t cograph = 16;
};

// "hom=80,subsets=18,cograph=14"; unknown keys or malformed values throw.
inline OracleLimits parse_limits(const std::string& text, OracleLimits base = {}) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("limits: expected key=value, got " + item);
    std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoul(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw ParseError("");
    } catch (...) {
      throw ParseError("limits: bad value in " + item);
    }
    if (key == "hom") {
      base.hom = value;
    } else if (key == "subsets") {
      base.subsets = std::min<std::size_t>(value, 26);
    } else if (key == "cograph") {
      base.cograph = std::min<std::size_t>(value, 24);
    } else {
      throw ParseError("limits: unknown key " + key);
    }
  }
  return base;
}

// Defaults, overridden by the P5HOM_LIMITS environment variable.
inline const OracleLimits& limits() {
  static const OracleLimits value = [] {
    const char* env = std::getenv("P5HOM_LIMITS");
    return env ? parse_limits(env) : OracleLimits{};
  }();
  return value;
}

// ---------------------------------------------------------------------------
// Maximum clique by branch and bound with a greedy-colouring bound.

namespace detail {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g), best_(g.order()), current_(g.order()) {}

  VertexSet run(const VertexSet& within) {
    if (!within.empty()) expand(within, 0);
    return best_;
  }

 private:
  void expand(VertexSet p, std::size_t depth) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    order.reserve(p.size());
    bound.reserve(p.size());
    VertexSet uncoloured = p;
    for (std::size_t colour = 1; !uncoloured.empty(); ++colour) {
      VertexSet q = uncoloured;
      for (Vertex v = q.first(); v != no_vertex; v = q.next(v + 1)) {
        q -= g_.neighbors(v);
        uncoloured.erase(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + bound[i] <= best_size_) return;
      Vertex v = order[i];
      current_.insert(v);
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (depth + 1 > best_size_) {
          best_ = current_;
          best_size_ = depth + 1;
        }
      } else {
        expand(std::move(next), depth + 1);
      }
      current_.erase(v);
      p.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
  std::size_t best_size_ = 0;
  VertexSet current_;
};

}  // namespace detail

inline VertexSet max_clique(const Graph& g, const VertexSet& within) {
  return detail::CliqueSearch(g).run(within);
}

inline HomWitness hom_exact(const Graph& g, std::size_t limit = limits().hom) {
  if (g.order() > limit)
    throw LimitError("hom_exact: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                     std::to_string(limit) + "; use greedy_hom instead");
  if (g.order() == 0) return {VertexSet(0), HomWitness::Kind::clique};
  VertexSet clique = max_clique(g, g.vertices());
  VertexSet indep = max_clique(g.complement(), g.vertices());
  if (indep.size() > clique.size()) return {indep, HomWitness::Kind::independent};
  return {clique, HomWitness::Kind::clique};
}

// Second exact oracle: every subset is tested, sets built from their prefix.
inline HomWitness hom_by_subsets(const Graph& g, std::size_t limit = limits().subsets) {
  const std::size_t n = g.order();
  if (n > limit) throw LimitError("hom_by_subsets: graph exceeds the enumeration limit");
  if (n == 0) return {VertexSet(0), HomWitness::Kind::clique};
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint8_t> clique(total, 0), indep(total, 0);
  clique[0] = indep[0] = 1;
  std::uint32_t best_c = 0, best_i = 0;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    clique[mask] = clique[rest] && (adj[low] & rest) == rest;
    indep[mask] = indep[rest] && (adj[low] & rest) == 0;
    if (clique[mask] && std::popcount(mask) > std::popcount(best_c)) best_c = mask;
    if (indep[mask] && std::popcount(mask) > std::popcount(best_i)) best_i = mask;
  }
  auto to_set = [&](std::uint32_t mask) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.insert(v);
    return s;
  };
  if (std::popcount(best_i) > std::popcount(best_c)) return {to_set(best_i), HomWitness::Kind::independent};
  return {to_set(best_c), HomWitness::Kind::clique};
}

// Greedy clique (and independent set) inside `within`: repeatedly keep the
// candidate with the most candidate neighbours of the wanted colour.
inline VertexSet greedy_homogeneous(const Graph& g, const VertexSet& within, Color color) {
  VertexSet out(g.order());
  VertexSet cand = within;
  while (!cand.empty()) {
    Vertex best = no_vertex;
    std::size_t best_deg = 0;
    for (Vertex v : cand) {
      std::size_t deg = g.neighbors(v).intersection_size(cand);
      if (color == Color::blue) deg = cand.size() - 1 - deg;
      if (best == no_vertex || deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    out.insert(best);
    cand &= g.colored_neighbors(best, color);
  }
  return out;
}

inline HomWitness greedy_hom(const Graph& g, const VertexSet& within) {
  if (within.empty()) return {VertexSet(g.order()), HomWitness::Kind::clique};
  VertexSet clique = greedy_homogeneous(g, within, Color::red);
  VertexSet indep = greedy_homogeneous(g, within, Color::blue);
  if (indep.size() > clique.size()) return {indep, HomWitness::Kind::independent};
  return {clique, HomWitness::Kind::clique};
}

inline HomWitness greedy_hom(const Graph& g) { return greedy_hom(g, g.vertices()); }

// ---------------------------------------------------------------------------
// Largest induced cograph by dynamic programming over subsets: a set of two
// or more vertices is a cograph exactly when the red (or else blue)
// component of its lowest vertex is a proper part and both that part and the
// remainder are cographs.

inline CographWitness largest_cograph_exact(const Graph& g, const VertexSet& within,
                                            std::size_t limit = limits().cograph) {
  const std::size_t k = within.size();
  if (k > limit) throw LimitError("largest_cograph_exact: set exceeds the enumeration limit");
  if (k == 0) throw PreconditionError("largest_cograph_exact: empty set");
  const std::vector<Vertex> label = within.to_vector();
  std::vector<std::uint32_t> adj(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && g.adjacent(label[i], label[j])) adj[i] |= std::uint32_t{1} << j;

  auto component_of_low = [&](std::uint32_t mask, bool red) {
    std::uint32_t comp = mask & (~mask + 1);
    std::uint32_t frontier = comp;
    while (frontier) {
      std::uint32_t reach = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        const int v = std::countr_zero(f);
        reach |= red ? adj[v] : ~adj[v] & ~(std::uint32_t{1} << v);
      }
      reach &= mask & ~comp;
      comp |= reach;
      frontier = reach;
    }
    return comp;
  };

  const std::uint32_t total = std::uint32_t{1} << k;
  std::vector<std::uint8_t> cog(total, 0);
  std::uint32_t best = 1;
  // Among maximum sets, the lexicographically smallest member list: compare
  // by the lowest differing vertex, which the smaller list contains.
  auto lex_smaller = [](std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  };
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if ((mask & (mask - 1)) == 0) {
      cog[mask] = 1;
    } else {
      std::uint32_t comp = component_of_low(mask, true);
      if (comp == mask) comp = component_of_low(mask, false);
      cog[mask] = comp != mask && cog[comp] && cog[mask ^ comp];
    }
    if (!cog[mask]) continue;
    const int pc = std::popcount(mask), pb = std::popcount(best);
    if (pc > pb || (pc == pb && lex_smaller(mask, best))) best = mask;
  }
  VertexSet members(g.order());
  for (std::size_t i = 0; i < k; ++i)
    if ((best >> i) & 1U) members.insert(label[i]);
  auto tree = cotree_of(g, members);
  return {members, std::move(*tree)};
}

inline CographWitness largest_cograph_exact(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("largest_cograph_exact: empty graph");
  return largest_cograph_exact(g, g.vertices());
}

}  // namespace p5hom
