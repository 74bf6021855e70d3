#pragma once

// Induced-pattern detectors, F4 counting and cograph recognition.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "p5hom/cotree.hpp"
#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"
#include "p5hom/witness.hpp"

namespace p5hom {

// ---------------------------------------------------------------------------
// Edge neighbourhood classes

struct EdgeNeighborhoodPartition {
  Edge e;
  VertexSet n00;  // adjacent to neither endpoint
  VertexSet n11;  // adjacent to both
  VertexSet n01;  // adjacent to exactly one
};

inline EdgeNeighborhoodPartition edge_neighborhoods(const Graph& g, Edge e) {
  if (e.u >= g.order() || e.v >= g.order() || e.u == e.v)
    throw PreconditionError("edge_neighborhoods: need two distinct vertices");
  const VertexSet& nx = g.neighbors(e.u);
  const VertexSet& ny = g.neighbors(e.v);
  VertexSet ends(g.order(), {e.u, e.v});
  EdgeNeighborhoodPartition p{e, (nx | ny | ends).complement(), nx & ny, (nx | ny) - (nx & ny)};
  p.n11 -= ends;
  p.n01 -= ends;
  return p;
}

namespace detail {

// Blue pairs between N01(e) and N00(e), walking whichever side is smaller.
// Buffers are reused, so a scan over all edges does not allocate.
class F4EdgeCounter {
 public:
  explicit F4EdgeCounter(const Graph& g) : g_(g), n00_(g.order()), n01_(g.order()) {}

  // Sets up N00 and N01 for e and returns |N01| * |N00|, an upper bound.
  std::uint64_t prepare(Edge e) {
    const VertexSet& nx = g_.neighbors(e.u);
    const VertexSet& ny = g_.neighbors(e.v);
    n01_ = nx;
    n01_ ^= ny;
    n01_.erase(e.u);
    n01_.erase(e.v);
    n00_ = nx;
    n00_ |= ny;
    n00_.flip();
    n00_.erase(e.u);
    n00_.erase(e.v);
    a_ = n01_.size();
    b_ = n00_.size();
    return a_ * b_;
  }

  std::uint64_t count() const {
    std::uint64_t total = 0;
    if (a_ == 0 || b_ == 0) return 0;
    if (a_ <= b_) {
      for (Vertex v : n01_) total += n00_.difference_size(g_.neighbors(v));
      return total;
    }
    for (Vertex w : n00_) total += n01_.intersection_size(g_.neighbors(w));
    return a_ * b_ - total;
  }

 private:
  const Graph& g_;
  VertexSet n00_, n01_;
  std::uint64_t a_ = 0, b_ = 0;
};

}  // namespace detail

// Number of induced F4 copies using e as one of their two edges: each copy is
// e plus one vertex of N01 and one vertex of N00 that are non-adjacent.
inline std::uint64_t count_f4_on_edge(const Graph& g, Edge e) {
  if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw PreconditionError("count_f4_on_edge: not an edge");
  detail::F4EdgeCounter c(g);
  c.prepare(e);
  return c.count();
}

inline std::uint64_t count_f4_total(const Graph& g) {
  std::uint64_t twice = 0;
  for (const Edge& e : g.edges()) twice += count_f4_on_edge(g, e);
  return twice / 2;
}

// ---------------------------------------------------------------------------
// Detectors

// Lexicographically least (a, b, c, d) with a-b-c induced and d isolated from it.
inline std::optional<F4Witness> find_induced_f4(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbors(a)) {
      VertexSet third = g.neighbors(b) - g.neighbors(a);
      third.erase(a);
      for (Vertex c : third) {
        VertexSet used = g.neighbors(a) | g.neighbors(b) | g.neighbors(c);
        used.insert(a);
        used.insert(b);
        used.insert(c);
        Vertex d = used.complement().first();
        if (d != no_vertex) return F4Witness{{a, b, c, d}};
      }
    }
  }
  return std::nullopt;
}

// Some induced P5, found through an edge xy: if a vertex v seeing exactly one
// of x, y is inconsistent to a red component C of the common non-neighbourhood,
// the mixed pair (u, w) in C closes u-w-v-x-y. Every induced P5 arises this way
// (take xy as its last edge), so absence here is a proof of P5-freeness.
inline std::optional<P5Witness> find_any_induced_p5(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto p = edge_neighborhoods(g, e);
    if (p.n00.size() < 2 || p.n01.empty()) continue;
    for (const VertexSet& comp : components(g, p.n00, Color::red)) {
      if (comp.size() < 2) continue;
      for (Vertex v : p.n01) {
        if (is_consistent(g, v, comp) != Consistency::inconsistent) continue;
        auto [u, w] = mixed_witness(g, v, comp);
        Vertex x = g.adjacent(v, e.u) ? e.u : e.v;
        Vertex y = x == e.u ? e.v : e.u;
        return P5Witness{{u, w, v, x, y}};
      }
    }
  }
  return std::nullopt;
}

// Lexicographically least ordered induced P5 (v1, ..., v5).
inline std::optional<P5Witness> find_induced_p5(const Graph& g) {
  if (!find_any_induced_p5(g)) return std::nullopt;
  const std::size_t n = g.order();
  auto closed = [&](Vertex v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
  };
  for (Vertex v1 = 0; v1 < n; ++v1) {
    const VertexSet c1 = closed(v1);
    for (Vertex v2 : g.neighbors(v1)) {
      const VertexSet c12 = c1 | closed(v2);
      VertexSet third = g.neighbors(v2) - c1;
      for (Vertex v3 : third) {
        VertexSet fourth = g.neighbors(v3) - c12;
        if (fourth.empty()) continue;
        const VertexSet c123 = c12 | closed(v3);
        for (Vertex v4 : fourth) {
          Vertex v5 = g.neighbors(v4).first_outside(c123);
          if (v5 != no_vertex) return P5Witness{{v1, v2, v3, v4, v5}};
        }
      }
    }
  }
  return std::nullopt;  // unreachable: the edge scan found one
}

inline bool is_p5_free(const Graph& g) { return !find_any_induced_p5(g).has_value(); }

// ---------------------------------------------------------------------------
// Cographs

namespace detail {

// s is connected in both colours and has at least two vertices, so it holds
// an induced P4. For a P4 end a, the vertex after it is inconsistent to the
// red component of the remaining two among the non-neighbours of a.
inline P4Witness p4_in_prime_piece(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet near = g.neighbors(v) & s;
    VertexSet far = s - near;
    far.erase(v);
    if (far.empty() || near.empty()) continue;
    for (const VertexSet& comp : components(g, far, Color::red)) {
      if (comp.size() < 2) continue;
      for (Vertex x : near) {
        if (is_consistent(g, x, comp) != Consistency::inconsistent) continue;
        auto [u, w] = mixed_witness(g, x, comp);
        return P4Witness{{v, x, w, u}};
      }
    }
  }
  throw PreconditionError("p4_in_prime_piece: set is not connected in both colours");
}

// Either a cotree for g[s] or the first piece connected in both colours.
inline std::variant<Cotree, VertexSet> decompose(const Graph& g, const VertexSet& s) {
  if (s.size() == 1) return Cotree::leaf(s.first());
  for (Color c : {Color::red, Color::blue}) {
    auto comps = components(g, s, c);
    if (comps.size() < 2) continue;
    std::vector<Cotree> kids;
    kids.reserve(comps.size());
    for (const auto& comp : comps) {
      auto sub = decompose(g, comp);
      if (std::holds_alternative<VertexSet>(sub)) return sub;
      kids.push_back(std::move(std::get<Cotree>(sub)));
    }
    // Red components combine under a union, blue ones under a join.
    return Cotree::node(Cotree::kind_for(opposite(c)), std::move(kids));
  }
  return s;
}

}  // namespace detail

using CographRecognition = std::variant<Cotree, P4Witness>;

// Canonical cotree of g[within], or an induced P4 inside it.
inline CographRecognition cograph_recognize(const Graph& g, const VertexSet& within) {
  if (within.empty()) throw PreconditionError("cograph_recognize: empty set");
  auto r = detail::decompose(g, within);
  if (auto* t = std::get_if<Cotree>(&r)) return std::move(*t);
  return detail::p4_in_prime_piece(g, std::get<VertexSet>(r));
}

inline CographRecognition cograph_recognize(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("cograph_recognize: empty graph");
  return cograph_recognize(g, g.vertices());
}

inline std::optional<Cotree> cotree_of(const Graph& g, const VertexSet& within) {
  auto r = detail::decompose(g, within);
  if (auto* t = std::get_if<Cotree>(&r)) return std::move(*t);
  return std::nullopt;
}

inline bool is_cograph(const Graph& g, const VertexSet& within) { return cotree_of(g, within).has_value(); }

// ---------------------------------------------------------------------------

// Smallest k with 4^k >= n, i.e. ceil(log2(n) / 2): every n-vertex graph has
// a homogeneous set at least this large.
inline std::size_t es_floor(std::size_t n) {
  if (n == 0) throw PreconditionError("es_floor: n must be positive");
  std::size_t k = 0;
  unsigned __int128 p = 1;
  while (p < n) {
    p *= 4;
    ++k;
  }
  return k;
}

}  // namespace p5hom
