#pragma once

// Homogeneous sets in F4-free graphs, and the anticomplete-pair pipeline:
// best F4 edge, red components of its common non-neighbourhood, consistency
// of the one-sided neighbours, size and non-edge-density filters.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "p5hom/detect.hpp"
#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"
#include "p5hom/io.hpp"
#include "p5hom/oracle.hpp"
#include "p5hom/witness.hpp"

namespace p5hom {

namespace detail {

using Wide = unsigned __int128;
inline constexpr Wide wide_cap = ~Wide{0} >> 1;

inline Wide sat_mul(Wide a, Wide b) {
  if (a != 0 && b > wide_cap / a) return wide_cap;
  return a * b;
}

inline Wide sat_pow(Wide base, unsigned exp) {
  Wide out = 1;
  for (unsigned i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

inline std::string wide_string(Wide x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return {s.rbegin(), s.rend()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// F4-free graphs

using F4FreeResult = std::variant<HomWitness, F4Witness>;

// With v of maximum non-degree d: a greedy clique has at least n/(d+1)
// vertices; when d is large the non-neighbourhood of v is a disjoint union of
// cliques, so its largest clique or one vertex per clique is big.
inline F4FreeResult hom_from_f4_free(const Graph& g, std::size_t m) {
  const std::size_t n = g.order();
  if (m == 0) throw PreconditionError("hom_from_f4_free: m must be positive");
  if (detail::sat_pow(m, 3) > n) throw PreconditionError("hom_from_f4_free: graph has fewer than m^3 vertices");
  if (auto f4 = find_induced_f4(g)) return *f4;

  HomWitness best{greedy_homogeneous(g, g.vertices(), Color::red), HomWitness::Kind::clique};
  Vertex v = 0;
  for (Vertex w = 1; w < n; ++w)
    if (g.degree(w) < g.degree(v)) v = w;
  const VertexSet far = g.non_neighbors(v);
  if (!far.empty()) {
    auto cliques = components(g, far, Color::red);
    VertexSet one_each(n);
    for (const auto& c : cliques) one_each.insert(c.first());
    const VertexSet& biggest = *std::max_element(
        cliques.begin(), cliques.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (biggest.size() > best.size()) best = {biggest, HomWitness::Kind::clique};
    if (one_each.size() > best.size()) best = {one_each, HomWitness::Kind::independent};
  }
  if (!verify_hom(g, best)) throw std::logic_error("hom_from_f4_free: produced an invalid set");
  return best;
}

// ---------------------------------------------------------------------------
// Best F4 edge

struct BestEdge {
  Edge edge;
  std::uint64_t count = 0;
};

// Edge in the most induced F4 copies; ties go to the lexicographically least edge.
inline BestEdge best_f4_edge(const Graph& g, unsigned jobs = 1) {
  const auto edges = g.edges();
  if (edges.empty()) throw PreconditionError("best_f4_edge: graph has no edges");
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(edges.size())));
  std::vector<BestEdge> partial(jobs, BestEdge{edges.front(), 0});
  auto work = [&](unsigned id) {
    std::size_t lo = edges.size() * id / jobs, hi = edges.size() * (id + 1) / jobs;
    detail::F4EdgeCounter counter(g);
    counter.prepare(edges[lo]);
    BestEdge best{edges[lo], counter.count()};
    for (std::size_t i = lo + 1; i < hi; ++i) {
      // |N01| * |N00| bounds the count; an edge that cannot win is skipped.
      if (counter.prepare(edges[i]) <= best.count) continue;
      auto c = counter.count();
      if (c > best.count) best = {edges[i], c};
    }
    partial[id] = best;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  // Chunks are in edge order, so a strict comparison keeps the least edge.
  BestEdge best = partial.front();
  for (const auto& p : partial)
    if (p.count > best.count) best = p;
  return best;
}

// ---------------------------------------------------------------------------
// Component consistency

// Every vertex seeing exactly one end of the edge must be consistent to each
// red component of the common non-neighbourhood; otherwise an induced P5 runs
// through the component, the vertex and the edge.
inline std::optional<P5Witness> check_component_consistency(const Graph& g, const EdgeNeighborhoodPartition& p,
                                                            const VertexSet& comp) {
  if (comp.size() < 2) return std::nullopt;
  for (Vertex v : p.n01) {
    if (is_consistent(g, v, comp) != Consistency::inconsistent) continue;
    auto [u, w] = mixed_witness(g, v, comp);
    Vertex x = g.adjacent(v, p.e.u) ? p.e.u : p.e.v;
    Vertex y = x == p.e.u ? p.e.v : p.e.u;
    return P5Witness{{u, w, v, x, y}};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Anticomplete pair

struct PairFinderOptions {
  bool force_pipeline = false;  // run the full pipeline even when n <= m^13
  unsigned jobs = 1;
};

struct ComponentRecord {
  VertexSet members;
  std::uint64_t nonedges = 0;  // non-edges towards N01
  bool small = false;
  bool low_degree = false;
};

struct PairFinderTrace {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string s;          // (m+1)^3, saturated
  bool premises_met = false;  // n > m^13
  bool forced = false;
  std::string branch;     // "trivial" or "pipeline"
  std::string note;
  std::optional<Edge> chosen_edge;
  std::uint64_t M = 0;
  std::vector<ComponentRecord> components;
  bool k_exceeds_m = false;
  bool relaxed = false;
  std::optional<std::size_t> selected;
  std::optional<VertexSet> b_prime;
  std::optional<bool> floor_met;  // |A|,|B| >= n/m^13, only when premises held
};

struct PairResult {
  enum class Kind { pair, trivial_nonedge, p5, diagnostic };
  Kind kind = Kind::diagnostic;
  std::optional<PairWitness> pair;
  std::optional<P5Witness> p5;
  std::string message;
  PairFinderTrace trace;
};

inline const char* to_string(PairResult::Kind k) {
  switch (k) {
    case PairResult::Kind::pair: return "pair";
    case PairResult::Kind::trivial_nonedge: return "trivial_nonedge";
    case PairResult::Kind::p5: return "p5";
    case PairResult::Kind::diagnostic: return "diagnostic";
  }
  return "?";
}

// Least non-edge inside `within`, both sides then grown alternately by the
// lowest vertex that is red to the side (keeping it connected) and blue to
// the other side.
inline PairWitness grow_trivial_pair(const Graph& g, const VertexSet& within) {
  const std::size_t n = g.order();
  Vertex u = no_vertex, v = no_vertex;
  VertexSet tmp(n);
  for (Vertex a : within) {
    tmp = within;
    tmp -= g.neighbors(a);
    Vertex b = tmp.next(a + 1);
    if (b != no_vertex) {
      u = a, v = b;
      break;
    }
  }
  if (u == no_vertex) throw PreconditionError("anticomplete pair: graph is complete");
  VertexSet side[2] = {VertexSet(n, {u}), VertexSet(n, {v})};
  // Reaches may leave `within`; candidates are always cut down to `open`.
  VertexSet reach[2] = {g.neighbors(u), g.neighbors(v)};
  VertexSet open = within;
  open.erase(u);
  open.erase(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < 2; ++i) {
      while (true) {
        tmp = reach[i];
        tmp &= open;
        tmp -= reach[1 - i];
        Vertex w = tmp.first();
        if (w == no_vertex) break;
        side[i].insert(w);
        open.erase(w);
        reach[i] |= g.neighbors(w);
        grew = true;
      }
    }
  }
  return {side[0], side[1], Color::blue};
}

inline PairWitness grow_trivial_pair(const Graph& g) { return grow_trivial_pair(g, g.vertices()); }

inline PairResult find_anticomplete_pair(const Graph& g, std::size_t m, const PairFinderOptions& opt = {}) {
  using detail::Wide;
  const std::size_t n = g.order();
  if (m == 0) throw PreconditionError("anticomplete pair: m must be positive");
  if (n < 2) throw PreconditionError("anticomplete pair: graph is complete");
  PairResult out;
  auto& tr = out.trace;
  tr.n = n;
  tr.m = m;
  const Wide s = detail::sat_pow(m + 1, 3);
  tr.s = detail::wide_string(s);
  const Wide m13 = detail::sat_pow(m, 13);
  tr.premises_met = Wide{n} > m13;
  tr.forced = opt.force_pipeline;

  auto trivial = [&](std::string note) {
    out.kind = PairResult::Kind::trivial_nonedge;
    out.pair = grow_trivial_pair(g);
    tr.branch = "trivial";
    tr.note = std::move(note);
    return out;
  };
  if (!tr.premises_met && !opt.force_pipeline) return trivial("n <= m^13");
  if (g.edge_count() == 0) return trivial("edgeless graph");
  if (g.edge_count() == n * (n - 1) / 2) throw PreconditionError("anticomplete pair: graph is complete");

  tr.branch = "pipeline";
  const BestEdge best = best_f4_edge(g, opt.jobs);
  tr.chosen_edge = best.edge;
  tr.M = best.count;
  if (best.count == 0) return trivial("no induced F4 on any edge");

  const auto part = edge_neighborhoods(g, best.edge);
  auto comps = components(g, part.n00, Color::red);
  for (const auto& c : comps) {
    if (auto p5 = check_component_consistency(g, part, c)) {
      out.kind = PairResult::Kind::p5;
      out.p5 = *p5;
      out.message = "one-sided neighbour inconsistent to a component";
      return out;
    }
  }
  tr.k_exceeds_m = comps.size() > m;
  if (tr.k_exceeds_m && tr.premises_met) {
    out.message = "more components than m: the supplied m is below hom(G)";
    return out;
  }

  // small: |C| s^4 m <= 2n; low degree: 2n |nonedges| <= M |C|.
  const Wide s4m = detail::sat_mul(detail::sat_pow(s, 4), m);
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    ComponentRecord rec;
    rec.members = comps[i];
    for (Vertex v : part.n01) rec.nonedges += comps[i].difference_size(g.neighbors(v));
    const Wide size = comps[i].size();
    rec.small = detail::sat_mul(size, s4m) <= Wide{2} * n;
    rec.low_degree = detail::sat_mul(Wide{2} * n, rec.nonedges) <= detail::sat_mul(best.count, size);
    if (!rec.small && !rec.low_degree) survivors.push_back(i);
    tr.components.push_back(std::move(rec));
  }
  if (survivors.empty()) {
    if (tr.premises_met) {
      out.message = "no component survives the filters: the supplied m is below hom(G)";
      return out;
    }
    tr.relaxed = true;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (tr.components[i].nonedges > 0) survivors.push_back(i);
  }
  // Largest non-edge count per vertex, lowest index on ties.
  std::size_t pick = survivors.front();
  for (std::size_t i : survivors) {
    const auto& a = tr.components[i];
    const auto& b = tr.components[pick];
    if (Wide{a.nonedges} * b.members.size() > Wide{b.nonedges} * a.members.size()) pick = i;
  }
  tr.selected = pick;
  const VertexSet& chosen = comps[pick];
  VertexSet bp(n);
  for (Vertex v : part.n01)
    if (!g.neighbors(v).intersects(chosen)) bp.insert(v);
  tr.b_prime = bp;
  VertexSet b = largest_component(g, bp, Color::red);
  PairWitness pair{chosen, b, Color::blue};
  if (b.empty() || !verify_pair(g, pair) || !is_connected(g, pair.left, Color::red) ||
      !is_connected(g, pair.right, Color::red))
    throw std::logic_error("anticomplete pair: pipeline produced an invalid pair");
  if (tr.premises_met) {
    // |side| * m^13 >= n for both sides
    tr.floor_met = detail::sat_mul(chosen.size(), m13) >= n && detail::sat_mul(b.size(), m13) >= n;
  }
  out.kind = PairResult::Kind::pair;
  out.pair = std::move(pair);
  return out;
}

inline json to_json(const PairFinderTrace& t) {
  json comps = json::array();
  for (const auto& c : t.components)
    comps.push_back({{"vertices", vertex_list(c.members)},
                     {"size", c.members.size()},
                     {"nonedge_count", c.nonedges},
                     {"small", c.small},
                     {"low_degree", c.low_degree}});
  json j{{"n", t.n},       {"m", t.m},           {"s", t.s},          {"premises_met", t.premises_met},
         {"forced", t.forced}, {"branch", t.branch}, {"M", t.M},   {"components", std::move(comps)},
         {"k_exceeds_m", t.k_exceeds_m}, {"relaxed", t.relaxed}};
  if (!t.note.empty()) j["note"] = t.note;
  if (t.chosen_edge) j["chosen_edge"] = {t.chosen_edge->u, t.chosen_edge->v};
  if (t.selected) j["selected"] = *t.selected;
  if (t.b_prime) j["b_prime"] = vertex_list(*t.b_prime);
  if (t.floor_met) j["floor_met"] = *t.floor_met;
  return j;
}

inline json to_json(const PairResult& r) {
  json j{{"outcome", to_string(r.kind)}, {"trace", to_json(r.trace)}};
  if (r.pair) j["witness"] = to_json(*r.pair);
  if (r.p5) j["witness"] = to_json(*r.p5);
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

}  // namespace p5hom
