#pragma once

// Cotrees: rooted trees whose leaves are vertices and whose internal nodes
// are disjoint unions (children pairwise blue) or joins (children pairwise red).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"

namespace p5hom {

struct Cotree {
  enum class Kind { leaf, union_node, join_node };

  Kind kind = Kind::leaf;
  Vertex vertex = 0;  // leaves only
  std::vector<Cotree> children;

  static Cotree leaf(Vertex v) { return Cotree{Kind::leaf, v, {}}; }

  static Cotree node(Kind kind, std::vector<Cotree> children) {
    if (kind == Kind::leaf) throw PreconditionError("Cotree::node: leaf kind");
    if (children.size() == 1) return std::move(children.front());
    if (children.empty()) throw PreconditionError("Cotree::node: no children");
    Cotree t{kind, 0, std::move(children)};
    t.normalize_top();
    return t;
  }

  // Node combining children that are pairwise pure in colour c.
  static Kind kind_for(Color c) { return c == Color::red ? Kind::join_node : Kind::union_node; }

  bool is_leaf() const { return kind == Kind::leaf; }

  std::size_t order() const {
    if (is_leaf()) return 1;
    std::size_t total = 0;
    for (const auto& c : children) total += c.order();
    return total;
  }

  Vertex min_leaf() const {
    if (is_leaf()) return vertex;
    Vertex best = no_vertex;
    for (const auto& c : children) best = std::min(best, c.min_leaf());
    return best;
  }

  void collect_leaves(std::vector<Vertex>& out) const {
    if (is_leaf()) {
      out.push_back(vertex);
      return;
    }
    for (const auto& c : children) c.collect_leaves(out);
  }

  std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    collect_leaves(out);
    std::sort(out.begin(), out.end());
    return out;
  }

  VertexSet leaf_set(std::size_t universe) const {
    VertexSet out(universe);
    std::vector<Vertex> l;
    collect_leaves(l);
    for (Vertex v : l) out.insert(v);
    return out;
  }

  // Canonical form: no child carries its parent's label, children sorted by
  // smallest leaf.
  void canonicalize() {
    if (is_leaf()) return;
    for (auto& c : children) c.canonicalize();
    normalize_top();
  }

  // Canonicalizes this node assuming every child already is canonical.
  void normalize_top() {
    if (is_leaf()) return;
    std::vector<Cotree> flat;
    for (auto& c : children) {
      if (c.kind == kind) {
        for (auto& gc : c.children) flat.push_back(std::move(gc));
      } else {
        flat.push_back(std::move(c));
      }
    }
    std::vector<std::pair<Vertex, Cotree>> keyed;
    keyed.reserve(flat.size());
    for (auto& c : flat) {
      Vertex key = c.leftmost_leaf();
      keyed.emplace_back(key, std::move(c));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    children.clear();
    for (auto& [key, c] : keyed) children.push_back(std::move(c));
  }

  // Equals min_leaf() on canonical trees.
  Vertex leftmost_leaf() const {
    const Cotree* t = this;
    while (!t->is_leaf()) t = &t->children.front();
    return t->vertex;
  }

  // Replaces each leaf v by replacement(v), a cotree over a module containing v.
  template <typename F>
  Cotree substitute_leaves(F&& replacement) const {
    if (is_leaf()) return replacement(vertex);
    std::vector<Cotree> kids;
    kids.reserve(children.size());
    for (const auto& c : children) kids.push_back(c.substitute_leaves(replacement));
    Cotree t{kind, 0, std::move(kids)};
    t.normalize_top();
    return t;
  }

  bool operator==(const Cotree&) const = default;
};

// Adds the edges the cotree implies among its leaves to the builder.
inline void realize_into(const Cotree& t, GraphBuilder& b) {
  if (t.is_leaf()) return;
  std::vector<std::vector<Vertex>> parts;
  for (const auto& c : t.children) {
    realize_into(c, b);
    parts.push_back(c.leaves());
  }
  if (t.kind == Cotree::Kind::join_node)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) b.join(parts[i], parts[j]);
}

// Graph on {0..universe-1} whose edges are exactly those the cotree implies.
inline Graph realize(const Cotree& t, std::size_t universe) {
  GraphBuilder b(universe);
  realize_into(t, b);
  return std::move(b).build();
}

}  // namespace p5hom
