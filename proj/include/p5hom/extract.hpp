#pragma once

// Cograph extraction from P5-free graphs. The recursion splits on red and
// blue components, solves small pieces exactly and otherwise runs the
// good-pair / partition iteration, combining the pieces it finds. Every step
// that the structure theory says cannot fail is checked at runtime: a failed
// check either exhibits an induced P5, an improved good pair, or a pure pair
// to recurse on.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "p5hom/cotree.hpp"
#include "p5hom/detect.hpp"
#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"
#include "p5hom/growth.hpp"
#include "p5hom/io.hpp"
#include "p5hom/oracle.hpp"
#include "p5hom/pair_finder.hpp"
#include "p5hom/witness.hpp"

namespace p5hom {

// ---------------------------------------------------------------------------
// Combination

inline CographWitness combine_pure(const Graph& g, const CographWitness& w1, const CographWitness& w2, Color color) {
  if (w1.members.intersects(w2.members)) throw PreconditionError("combine_pure: overlapping cographs");
  if (!is_pure_pair(g, w1.members, w2.members, color)) throw PreconditionError("combine_pure: pair is not pure");
  return {w1.members | w2.members, Cotree::node(Cotree::kind_for(color), {w1.cotree, w2.cotree})};
}

inline CographWitness combine_r_partite(const Graph& g, const std::vector<VertexSet>& parts,
                                        const std::vector<CographWitness>& inner, Color color) {
  if (inner.empty() || inner.size() != parts.size())
    throw PreconditionError("combine_r_partite: need one inner cograph per part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!inner[i].members.is_subset_of(parts[i])) throw PreconditionError("combine_r_partite: inner set leaves its part");
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!is_pure_pair(g, parts[i], parts[j], color)) throw PreconditionError("combine_r_partite: parts not pure");
  }
  VertexSet members(g.order());
  std::vector<Cotree> kids;
  for (const auto& w : inner) {
    members |= w.members;
    kids.push_back(w.cotree);
  }
  return {members, Cotree::node(Cotree::kind_for(color), std::move(kids))};
}

struct BucketReport {
  std::size_t bucket = 0;  // parts of size in (2^(bucket-1), 2^bucket]
  std::vector<std::size_t> totals;
  std::size_t smallest = 0, largest = 0, total = 0;
  long double floor = 0;  // size promised by the bucketing argument
};

inline std::size_t ceil_log2(std::size_t x) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < x) ++k;
  return k;
}

// Parts pairwise pure (any colours). Picks the dyadic size class with the
// largest total, extracts a cograph among one representative per part of that
// class, and substitutes a cograph of each chosen part for its representative.
inline CographWitness combine_bucketed(const Graph& g, const GrowthFunction& gf, const std::vector<VertexSet>& parts,
                                       const std::function<CographWitness(const VertexSet&)>& extractor,
                                       BucketReport* report = nullptr) {
  if (parts.empty()) throw PreconditionError("combine_bucketed: no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw PreconditionError("combine_bucketed: empty part");
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (pair_color(g, parts[i], parts[j]) == PairColor::mixed)
        throw PreconditionError("combine_bucketed: parts are not pairwise pure");
  }
  BucketReport rep;
  rep.smallest = parts.front().size();
  for (const auto& p : parts) {
    const std::size_t b = ceil_log2(p.size());
    if (rep.totals.size() <= b) rep.totals.resize(b + 1, 0);
    rep.totals[b] += p.size();
    rep.smallest = std::min(rep.smallest, p.size());
    rep.largest = std::max(rep.largest, p.size());
    rep.total += p.size();
  }
  for (std::size_t b = 0; b < rep.totals.size(); ++b)
    if (rep.totals[b] > rep.totals[rep.bucket]) rep.bucket = b;
  {
    const long double s = rep.total, a = rep.smallest, b = rep.largest;
    const long double lg = std::log2(4 * b / a);
    rep.floor = std::min(gf.f(s / (2 * a * lg)) * gf.f(a), gf.f(s / (2 * b * lg)) * gf.f(b));
  }

  VertexSet reps(g.order());
  std::vector<const VertexSet*> part_of(g.order(), nullptr);
  for (const auto& p : parts) {
    if (ceil_log2(p.size()) != rep.bucket) continue;
    reps.insert(p.first());
    part_of[p.first()] = &p;
  }
  CographWitness top = extractor(reps);
  VertexSet members(g.order());
  Cotree tree = top.cotree.substitute_leaves([&](Vertex v) {
    CographWitness inner = part_of[v]->size() == 1 ? CographWitness{*part_of[v], Cotree::leaf(v)}
                                                   : extractor(*part_of[v]);
    members |= inner.members;
    return inner.cotree;
  });
  if (report) *report = std::move(rep);
  return {members, std::move(tree)};
}

// ---------------------------------------------------------------------------
// Good pairs: anticomplete, both sides red-connected, |A| <= |B|.

struct GoodPair {
  VertexSet a;
  VertexSet b;
};

inline GoodPair normalized(VertexSet x, VertexSet y) {
  if (x.size() > y.size()) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

// (|A|, |B|) strictly larger in lexicographic order.
inline bool lex_better(const GoodPair& p, const GoodPair& q) {
  if (p.a.size() != q.a.size()) return p.a.size() > q.a.size();
  return p.b.size() > q.b.size();
}

inline bool is_good_pair(const Graph& g, const VertexSet& within, const GoodPair& p) {
  return !p.a.empty() && !p.b.empty() && p.a.is_subset_of(within) && p.b.is_subset_of(within) &&
         !p.a.intersects(p.b) && p.a.size() <= p.b.size() && is_pure_pair(g, p.a, p.b, Color::blue) &&
         is_connected(g, p.a, Color::red) && is_connected(g, p.b, Color::red);
}

// Vertices of `within` outside x with no red neighbour in x.
inline VertexSet blue_to(const Graph& g, const VertexSet& within, const VertexSet& x) {
  VertexSet out = within - x;
  for (Vertex v : x) out -= g.neighbors(v);
  return out;
}

// Alternately replaces B by the largest red component blue to A, and A by the
// largest red component blue to B, while (|A|, |B|) strictly increases.
inline GoodPair improve_good_pair(const Graph& g, const VertexSet& within, GoodPair p) {
  while (true) {
    VertexSet nb = largest_component(g, blue_to(g, within, p.a), Color::red);
    if (nb.empty()) return p;
    VertexSet na = largest_component(g, blue_to(g, within, nb), Color::red);
    GoodPair cand = normalized(std::move(na), std::move(nb));
    if (!lex_better(cand, p)) return p;
    p = std::move(cand);
  }
}

// A locally maximal good pair inside `within`, seeded by the anticomplete
// pair routine; none when `within` is a clique. A P5 met by the seeding step
// is reported through `p5`.
inline std::optional<GoodPair> find_good_pair(const Graph& g, const VertexSet& within,
                                              std::optional<P5Witness>* p5 = nullptr) {
  if (within.size() < 2) return std::nullopt;
  bool clique = true;
  for (Vertex v : within) {
    if ((within - g.neighbors(v)).size() > 1) {
      clique = false;
      break;
    }
  }
  if (clique) return std::nullopt;

  // Any set with a non-edge has hom >= 2, so below 2^13 vertices the
  // anticomplete-pair routine would take its trivial branch anyway.
  PairWitness seed;
  const std::size_t m = within.size() <= (std::size_t{1} << 13) ? 2 : greedy_hom(g, within).size();
  if (detail::Wide{within.size()} <= detail::sat_pow(m, 13)) {
    seed = grow_trivial_pair(g, within);
  } else {
    auto sub = induced(g, within);
    auto r = find_anticomplete_pair(sub.graph, m);
    if (r.kind == PairResult::Kind::pair || r.kind == PairResult::Kind::trivial_nonedge) {
      seed = {sub.lift(r.pair->left, g.order()), sub.lift(r.pair->right, g.order()), Color::blue};
    } else {
      if (r.p5 && p5) {
        auto path = r.p5->path;
        for (auto& v : path) v = sub.labels[v];
        *p5 = P5Witness{path};
      }
      seed = grow_trivial_pair(g, within);
    }
  }
  return improve_good_pair(g, within, normalized(seed.left, seed.right));
}

// ---------------------------------------------------------------------------
// Partition step

struct StepPartition {
  VertexSet a, blu, red, err;
};

// Size targets evaluated against the working set (recorded, not enforced).
struct StepBounds {
  std::size_t n = 0;
  std::size_t a_floor = 0;    // ceil(n^(1-eps))
  std::size_t blu_floor = 0;  // ceil(2 n^(1-eps^2))
  long double degree_cap = 0; // n^(eps^2) |A|
  std::size_t max_blue_degree = 0;  // from Red into Blu
  bool a_ok = false, blu_ok = false, degree_ok = false, err_ok = false;
};

struct StepOutcome {
  enum class Kind { partition, p5, purepair, maximality_violation };
  Kind kind = Kind::partition;
  StepPartition partition;
  std::optional<P5Witness> p5;
  std::optional<PairWitness> pure;
  std::optional<GoodPair> improved;
  std::string check;  // the check that produced a non-partition outcome
  std::vector<std::string> fallbacks;
  StepBounds bounds;
};

inline const char* to_string(StepOutcome::Kind k) {
  switch (k) {
    case StepOutcome::Kind::partition: return "partition";
    case StepOutcome::Kind::p5: return "p5";
    case StepOutcome::Kind::purepair: return "purepair";
    case StepOutcome::Kind::maximality_violation: return "maximality_violation";
  }
  return "?";
}

namespace detail {

inline StepOutcome p5_outcome(const Graph& g, P5Witness w, std::string check) {
  StepOutcome out;
  if (!verify_p5(g, w)) throw std::logic_error("partition step: constructed path is not induced (" + check + ")");
  out.kind = StepOutcome::Kind::p5;
  out.p5 = w;
  out.check = std::move(check);
  return out;
}

inline StepOutcome improved_outcome(GoodPair p, std::string check) {
  StepOutcome out;
  out.kind = StepOutcome::Kind::maximality_violation;
  out.improved = std::move(p);
  out.check = std::move(check);
  return out;
}

inline bool red_to(const Graph& g, Vertex v, const VertexSet& s) { return s.is_subset_of(g.neighbors(v)); }
inline bool blue_to(const Graph& g, Vertex v, const VertexSet& s) { return !g.neighbors(v).intersects(s); }

// v is red to its own side P and not red to Q' (the largest blue component of
// the other side Q). If v is not blue to Q' either, some u in `opposite` blue
// to v, and a vertex of P' blue to u, close an induced P5 with the mixed pair
// of v in Q'.
inline std::optional<P5Witness> side_blue_check(const Graph& g, Vertex v, const VertexSet& p_prime,
                                                const VertexSet& q_prime, const VertexSet& opposite) {
  if (blue_to(g, v, q_prime)) return std::nullopt;
  auto [r, b] = mixed_witness(g, v, q_prime, Color::blue);
  Vertex u = (opposite - g.neighbors(v)).first();
  Vertex far = (p_prime - g.neighbors(u)).first();
  if (u == no_vertex || far == no_vertex) return std::nullopt;
  return P5Witness{{far, v, r, u, b}};
}

}  // namespace detail

inline StepOutcome build_partition_step(const Graph& g, const VertexSet& within, const GoodPair& gp,
                                         const GrowthFunction& gf = {}) {
  using detail::blue_to;
  using detail::red_to;
  if (!is_good_pair(g, within, gp)) throw PreconditionError("build_partition_step: not a good pair");
  const VertexSet& A = gp.a;
  const VertexSet& B = gp.b;
  const std::size_t n = within.size();
  const VertexSet rest = within - A - B;

  // Consistency split and the blue-to-both class.
  VertexSet X(g.order()), C(g.order()), D(g.order()), E(g.order());
  for (Vertex v : rest) {
    const Consistency ca = is_consistent(g, v, A), cb = is_consistent(g, v, B);
    if (ca == Consistency::inconsistent && cb == Consistency::inconsistent) {
      auto [a2, a1] = mixed_witness(g, v, A);
      auto [b2, b1] = mixed_witness(g, v, B);
      return detail::p5_outcome(g, P5Witness{{a2, a1, v, b1, b2}}, "inconsistent to both sides");
    }
    if (ca == Consistency::blue && cb == Consistency::blue) {
      X.insert(v);
    } else if (ca == Consistency::blue) {
      VertexSet nb = B;
      nb.insert(v);
      return detail::improved_outcome(normalized(A, nb), "blue to one side only");
    } else if (cb == Consistency::blue) {
      VertexSet na = A;
      na.insert(v);
      return detail::improved_outcome(normalized(na, B), "blue to one side only");
    } else if (ca == Consistency::red && cb == Consistency::red) {
      D.insert(v);
    } else if (ca == Consistency::red) {
      C.insert(v);
    } else {
      E.insert(v);
    }
  }

  // Red components of X are no larger than A.
  {
    VertexSet big = largest_component(g, X, Color::red);
    if (big.size() > A.size()) return detail::improved_outcome(normalized(big, B), "large component blue to both");
  }

  const VertexSet Ap = largest_component(g, A, Color::blue);
  const VertexSet Bp = largest_component(g, B, Color::blue);
  const VertexSet Bpp = largest_component(g, Bp, Color::red);
  const VertexSet App = largest_component(g, Ap, Color::red);
  StepOutcome out;

  VertexSet Dp(g.order());
  for (Vertex v : C | D | E)
    if (red_to(g, v, Ap) && red_to(g, v, Bp)) Dp.insert(v);
  const VertexSet Cp = C - Dp, Ep = E - Dp;
  VertexSet Cb(g.order()), Eb(g.order());
  for (Vertex v : Cp)
    if (Ep.difference_size(g.neighbors(v)) > 0) Cb.insert(v);
  for (Vertex v : Ep)
    if (Cp.difference_size(g.neighbors(v)) > 0) Eb.insert(v);

  // The mixed classes are blue to the far side's core.
  for (Vertex v : Cb)
    if (auto w = detail::side_blue_check(g, v, Ap, Bp, Ep)) return detail::p5_outcome(g, *w, "mixed class not blue to core");
  for (Vertex v : Eb)
    if (auto w = detail::side_blue_check(g, v, Bp, Ap, Cp)) return detail::p5_outcome(g, *w, "mixed class not blue to core");

  // Blue components of one mixed class are consistent to the other class.
  auto cross_check = [&](const VertexSet& own, const VertexSet& other, const VertexSet& own_core,
                         const VertexSet& other_core) -> std::optional<P5Witness> {
    for (const auto& K : components(g, own, Color::blue)) {
      if (K.size() < 2) continue;
      for (Vertex y : other) {
        if (is_consistent(g, y, K) != Consistency::inconsistent) continue;
        auto [r, v] = mixed_witness(g, y, K, Color::blue);
        return P5Witness{{v, own_core.first(), r, y, other_core.first()}};
      }
    }
    return std::nullopt;
  };
  if (auto w = cross_check(Cb, Eb, Ap, Bp)) return detail::p5_outcome(g, *w, "mixed classes not consistent");
  if (auto w = cross_check(Eb, Cb, Bp, Ap)) return detail::p5_outcome(g, *w, "mixed classes not consistent");

  // Nonempty mixed classes extend a side.
  if (!Cb.empty()) {
    GoodPair cand = normalized(A | Cb, Bpp);
    if (lex_better(cand, gp)) return detail::improved_outcome(std::move(cand), "mixed class extends a side");
    out.fallbacks.push_back("mixed class nonempty");
  }
  if (!Eb.empty()) {
    GoodPair cand = normalized(B | Eb, App);
    if (lex_better(cand, gp)) return detail::improved_outcome(std::move(cand), "mixed class extends a side");
    if (Cb.empty()) out.fallbacks.push_back("mixed class nonempty");
  }

  // D'' sends a blue edge to A; it must be red to C'.
  VertexSet Dpp(g.order());
  for (Vertex y : Dp)
    if (!red_to(g, y, A)) Dpp.insert(y);
  bool noted_411 = false;
  for (Vertex y : Dpp) {
    for (Vertex x : Cp - g.neighbors(y)) {
      if (blue_to(g, x, Bp)) {
        VertexSet na = A;
        na.insert(x);
        GoodPair cand = normalized(na, Bpp);
        if (lex_better(cand, gp)) return detail::improved_outcome(std::move(cand), "blue pair between D'' and C'");
        if (!noted_411) out.fallbacks.push_back("blue pair between D'' and C'");
        noted_411 = true;
        continue;
      }
      auto [b1, b2] = mixed_witness(g, x, Bp, Color::blue);
      Vertex a = (A - g.neighbors(y)).first();
      return detail::p5_outcome(g, P5Witness{{a, x, b1, y, b2}}, "blue pair between D'' and C'");
    }
  }

  // Blue neighbourhoods inside B hold no red component larger than A.
  for (Vertex u : C | D | E) {
    VertexSet far = B - g.neighbors(u);
    if (auto big = component_larger_than(g, far, Color::red, A.size())) {
      VertexSet na = A;
      na.insert(u);
      return detail::improved_outcome(normalized(na, *big), "large blue neighbourhood in B");
    }
  }

  out.partition = {A, B | X, Cp | (Dp - Dpp), Dpp | Ep};
  const auto& P = out.partition;

  auto& bd = out.bounds;
  bd.n = n;
  const long double e = gf.eps(static_cast<long double>(n));
  bd.a_floor = static_cast<std::size_t>(std::ceil(std::pow(static_cast<long double>(n), 1 - e)));
  bd.blu_floor = static_cast<std::size_t>(std::ceil(2 * std::pow(static_cast<long double>(n), 1 - e * e)));
  bd.degree_cap = std::pow(static_cast<long double>(n), e * e) * A.size();
  for (Vertex u : P.red) bd.max_blue_degree = std::max(bd.max_blue_degree, P.blu.difference_size(g.neighbors(u)));
  bd.a_ok = A.size() >= bd.a_floor;
  bd.blu_ok = P.blu.size() >= bd.blu_floor;
  bd.degree_ok = static_cast<long double>(bd.max_blue_degree) <= bd.degree_cap;
  bd.err_ok = P.err.size() <= A.size();

  if (!bd.err_ok) {
    const VertexSet left = Ep | Dpp, right = Bp | Cp;
    if (!left.empty() && !right.empty() && !left.intersects(right) && is_pure_pair(g, left, right, Color::red)) {
      out.pure = PairWitness{left, right, Color::red};
    } else {
      out.pure = PairWitness{A, B | X, Color::blue};
      out.fallbacks.push_back("error class larger than A");
    }
    out.kind = StepOutcome::Kind::purepair;
    out.check = "error class larger than A";
    return out;
  }
  out.kind = StepOutcome::Kind::partition;
  return out;
}

// ---------------------------------------------------------------------------
// Iteration

struct IterationStep {
  GoodPair pair;
  StepPartition part;
  StepBounds bounds;
};

struct IterationResult {
  std::vector<IterationStep> steps;  // completed partitions; their A's are pairwise pure
  std::size_t stop_size = 0;         // iterate while the remaining set has at least this many vertices
  std::optional<P5Witness> p5;
  std::optional<PairWitness> pure;   // terminal pure pair, if any
  std::string stop_reason;
  std::map<std::string, std::size_t> fallbacks;
  std::size_t improvements = 0;
};

namespace detail {

// A_i and A_j (i < j) mixed: A_j meets both Red_i and Blu_i. Either a P5
// through x in A_i, or a pure pair between part of Red_i ∩ Blu_j and the
// largest blue component of Red_j ∩ Blu_i.
inline void resolve_mixed_parts(const Graph& g, const IterationStep& si, const IterationStep& sj,
                                IterationResult& res) {
  const VertexSet N = sj.part.red & si.part.blu;
  const VertexSet Np = largest_component(g, N, Color::blue);
  const VertexSet far = si.part.red & sj.part.blu;
  const VertexSet bj = sj.part.a & si.part.blu;
  if (Np.empty() || far.empty()) {
    res.fallbacks["parts not pure"]++;
    return;
  }
  VertexSet red_side(g.order()), blue_side(g.order());
  for (Vertex b2 : far) {
    switch (is_consistent(g, b2, Np)) {
      case Consistency::red: red_side.insert(b2); break;
      case Consistency::blue: blue_side.insert(b2); break;
      case Consistency::inconsistent: {
        auto [u, v] = mixed_witness(g, b2, Np, Color::blue);
        P5Witness w{{si.part.a.first(), b2, u, bj.first(), v}};
        if (!bj.empty() && verify_p5(g, w)) {
          res.p5 = w;
          return;
        }
        res.fallbacks["parts not pure"]++;
        return;
      }
    }
  }
  if (red_side.size() >= blue_side.size())
    res.pure = PairWitness{red_side, Np, Color::red};
  else
    res.pure = PairWitness{blue_side, Np, Color::blue};
}

}  // namespace detail

inline IterationResult run_iteration(const Graph& g, const VertexSet& within, const GrowthFunction& gf = {}) {
  IterationResult res;
  const std::size_t n = within.size();
  if (n < 2) {
    res.stop_reason = "too small";
    return res;
  }
  const long double slack = gf.iteration_slack(static_cast<long double>(n));
  res.stop_size = static_cast<std::size_t>(std::ceil(static_cast<long double>(n) - slack));
  VertexSet current = within;
  while (current.size() >= res.stop_size) {
    std::optional<P5Witness> seed_p5;
    auto gp = find_good_pair(g, current, &seed_p5);
    if (seed_p5) {
      res.p5 = seed_p5;
      res.stop_reason = "p5";
      return res;
    }
    if (!gp) {
      res.stop_reason = "remaining set is a clique";
      return res;
    }
    StepOutcome mc;
    for (std::size_t guard = 0;; ++guard) {
      mc = build_partition_step(g, current, *gp, gf);
      if (mc.kind != StepOutcome::Kind::maximality_violation) break;
      if (!mc.improved || !lex_better(*mc.improved, *gp) || guard > 4 * n)
        throw std::logic_error("run_iteration: improvement did not increase the pair");
      gp = improve_good_pair(g, current, *mc.improved);
      ++res.improvements;
    }
    for (const auto& f : mc.fallbacks) res.fallbacks[f]++;
    if (mc.kind == StepOutcome::Kind::p5) {
      res.p5 = mc.p5;
      res.stop_reason = "p5";
      return res;
    }
    if (mc.kind == StepOutcome::Kind::purepair) {
      res.pure = mc.pure;
      res.stop_reason = "pure pair";
      return res;
    }
    IterationStep step{*gp, mc.partition, mc.bounds};
    for (const auto& prev : res.steps) {
      if (pair_color(g, prev.part.a, step.part.a) == PairColor::mixed) {
        detail::resolve_mixed_parts(g, prev, step, res);
        res.stop_reason = res.p5 ? "p5" : "parts not pure";
        return res;
      }
    }
    current -= step.part.a;
    current -= step.part.err;
    res.steps.push_back(std::move(step));
  }
  res.stop_reason = "remaining set below threshold";
  return res;
}

// ---------------------------------------------------------------------------
// Extraction

struct ExtractOptions {
  GrowthFunction gf;
  std::size_t exact_cutoff = 16;
  std::size_t depth_cap = 200;
  std::size_t node_budget = 4000;  // recursion nodes allowed to run the iteration
};

struct ExtractTrace {
  std::size_t t = 0;                   // completed partitions at the top iterating node
  std::vector<std::size_t> a_sizes;    // their |A_i|
  std::vector<std::size_t> err_sizes;  // their |Err_i|
  std::string stop_reason;
  std::size_t stop_size = 0;
  std::optional<BucketReport> buckets;
  std::map<std::string, std::size_t> fallbacks;
  std::map<std::string, std::size_t> candidates;  // top-level candidate sizes
  std::size_t nodes = 0;
  std::size_t iterating_nodes = 0;
  std::size_t improvements = 0;
  std::size_t max_depth = 0;
  bool short_circuit = false;
  bool local_maximizer = true;  // good pairs are locally, not globally, maximal
};

struct ExtractResult {
  CographWitness cograph;
  std::optional<P5Witness> p5;
  ExtractTrace trace;
};

namespace detail {

inline CographWitness hom_as_cograph(const HomWitness& h) {
  std::vector<Cotree> leaves;
  for (Vertex v : h.members) leaves.push_back(Cotree::leaf(v));
  const auto kind = h.kind == HomWitness::Kind::clique ? Cotree::Kind::join_node : Cotree::Kind::union_node;
  return {h.members, Cotree::node(kind, std::move(leaves))};
}

class Extractor {
 public:
  Extractor(const Graph& g, const ExtractOptions& opt, ExtractTrace& trace, std::optional<P5Witness>& p5)
      : g_(g), opt_(opt), tr_(trace), p5_(p5) {}

  CographWitness run(const VertexSet& s, std::size_t depth) {
    ++tr_.nodes;
    tr_.max_depth = std::max(tr_.max_depth, depth);
    if (s.size() == 1) return {s, Cotree::leaf(s.first())};
    if (auto t = cotree_of(g_, s)) {
      if (depth == 0) tr_.short_circuit = true;
      return {s, std::move(*t)};
    }
    if (s.size() <= opt_.exact_cutoff) return largest_cograph_exact(g_, s, opt_.exact_cutoff);
    for (Color c : {Color::red, Color::blue}) {
      auto comps = components(g_, s, c);
      if (comps.size() < 2) continue;
      std::vector<CographWitness> inner;
      for (const auto& comp : comps) inner.push_back(run(comp, depth + 1));
      return combine_r_partite(g_, comps, inner, opposite(c));
    }

    CographWitness best = hom_as_cograph(greedy_hom(g_, s));
    const bool top = depth == 0;
    if (top) tr_.candidates["homogeneous"] = best.size();
    if (depth >= opt_.depth_cap || tr_.iterating_nodes >= opt_.node_budget) {
      tr_.fallbacks["budget exhausted"]++;
      return best;
    }
    ++tr_.iterating_nodes;
    auto consider = [&](CographWitness w, const char* name) {
      if (top) tr_.candidates[name] = w.size();
      if (w.size() > best.size()) best = std::move(w);
    };

    IterationResult it = run_iteration(g_, s, opt_.gf);
    for (const auto& [k, v] : it.fallbacks) tr_.fallbacks[k] += v;
    tr_.improvements += it.improvements;
    if (it.p5 && !p5_) p5_ = it.p5;
    if (top) {
      tr_.t = it.steps.size();
      for (const auto& st : it.steps) {
        tr_.a_sizes.push_back(st.part.a.size());
        tr_.err_sizes.push_back(st.part.err.size());
      }
      tr_.stop_reason = it.stop_reason;
      tr_.stop_size = it.stop_size;
    }

    if (!it.steps.empty()) {
      std::vector<VertexSet> parts;
      for (const auto& st : it.steps) parts.push_back(st.part.a);
      BucketReport rep;
      auto w = combine_bucketed(g_, opt_.gf, parts, [&](const VertexSet& x) { return run(x, depth + 1); }, &rep);
      if (top) tr_.buckets = rep;
      consider(std::move(w), "parts");

      // The first pair is blue: its sides combine under a union.
      const auto& first = it.steps.front();
      consider(combine_pure(g_, run(first.pair.a, depth + 1), run(first.pair.b, depth + 1), Color::blue),
               "first pair");
    }
    if (it.pure) {
      consider(combine_pure(g_, run(it.pure->left, depth + 1), run(it.pure->right, depth + 1), it.pure->color),
               "pure pair");
    }
    return best;
  }

 private:
  const Graph& g_;
  const ExtractOptions& opt_;
  ExtractTrace& tr_;
  std::optional<P5Witness>& p5_;
};

}  // namespace detail

inline ExtractResult extract_cograph(const Graph& g, const VertexSet& within, const ExtractOptions& opt = {}) {
  if (within.empty()) throw PreconditionError("extract_cograph: empty set");
  ExtractResult res;
  detail::Extractor ex(g, opt, res.trace, res.p5);
  res.cograph = ex.run(within, 0);
  if (!verify_cograph(g, res.cograph)) throw std::logic_error("extract_cograph: produced an invalid cograph");
  return res;
}

inline ExtractResult extract_cograph(const Graph& g, const ExtractOptions& opt = {}) {
  if (g.order() == 0) throw PreconditionError("extract_cograph: empty graph");
  return extract_cograph(g, g.vertices(), opt);
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const StepPartition& p) {
  return {{"a", vertex_list(p.a)}, {"blu", vertex_list(p.blu)}, {"red", vertex_list(p.red)}, {"err", vertex_list(p.err)}};
}

inline json to_json(const StepBounds& b) {
  return {{"n", b.n},
          {"a_floor", b.a_floor},
          {"blu_floor", b.blu_floor},
          {"degree_cap", static_cast<double>(b.degree_cap)},
          {"max_blue_degree", b.max_blue_degree},
          {"a_ok", b.a_ok},
          {"blu_ok", b.blu_ok},
          {"degree_ok", b.degree_ok},
          {"err_ok", b.err_ok}};
}

inline json to_json(const ExtractTrace& t) {
  json j{{"t", t.t},
         {"a_sizes", t.a_sizes},
         {"err_sizes", t.err_sizes},
         {"stop_reason", t.stop_reason},
         {"stop_size", t.stop_size},
         {"fallbacks", t.fallbacks},
         {"candidates", t.candidates},
         {"nodes", t.nodes},
         {"iterating_nodes", t.iterating_nodes},
         {"improvements", t.improvements},
         {"max_depth", t.max_depth},
         {"short_circuit", t.short_circuit},
         {"local_maximizer", t.local_maximizer}};
  if (t.buckets)
    j["buckets"] = {{"chosen", t.buckets->bucket},
                    {"totals", t.buckets->totals},
                    {"smallest", t.buckets->smallest},
                    {"largest", t.buckets->largest},
                    {"floor", static_cast<double>(t.buckets->floor)}};
  return j;
}

}  // namespace p5hom
