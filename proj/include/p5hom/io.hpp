#pragma once

// graph6 and JSON edge-list readers/writers, and JSON forms of certificates.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "p5hom/cotree.hpp"
#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"
#include "p5hom/witness.hpp"

namespace p5hom {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// graph6

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0, acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= s.size()) throw ParseError("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
    return c - 63;
  };
  std::uint64_t n = next();
  if (n == 63) {
    std::uint64_t a = next();
    if (a == 63) {
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | next();
    } else {
      n = (a << 12) | (next() << 6);
      n |= next();
    }
  }
  if (n > 1'000'000) throw ParseError("graph6: graph too large");
  GraphBuilder b(n);
  int bits = 0;
  std::uint64_t acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      --bits;
      if ((acc >> bits) & 1U) b.add_edge(i, j);
    }
  }
  if (pos != s.size()) throw ParseError("graph6: trailing characters");
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// JSON edge lists: {"n": int, "edges": [[u, v], ...]}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline json graph_to_json(const InducedSubgraph& sub) {
  json j = graph_to_json(sub.graph);
  j["labels"] = sub.labels;
  return j;
}

inline Graph graph_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) throw ParseError("graph json: negative n");
    GraphBuilder b(static_cast<std::size_t>(n));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph json: edge must be a pair");
      const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("graph json: endpoint out of range");
      if (u == v) throw ParseError("graph json: self-loop");
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return std::move(b).build();
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
}

// Accepts either format; JSON is recognised by a leading '{'. For graph6 the
// first non-empty line is read.
inline Graph parse_graph(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  text.remove_prefix(start);
  if (text.empty()) throw ParseError("empty graph input");
  if (text.front() == '{') {
    try {
      return graph_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("graph json: ") + e.what());
    }
  }
  auto eol = text.find_first_of("\r\n");
  return from_graph6(text.substr(0, eol));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

// ---------------------------------------------------------------------------
// Certificates

inline json cotree_to_json(const Cotree& t) {
  if (t.is_leaf()) return t.vertex;
  json arr = json::array();
  arr.push_back(t.kind == Cotree::Kind::join_node ? "join" : "union");
  for (const auto& c : t.children) arr.push_back(cotree_to_json(c));
  return arr;
}

inline Cotree cotree_from_json(const json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw ParseError("cotree: negative leaf");
    return Cotree::leaf(static_cast<Vertex>(v));
  }
  if (!j.is_array() || j.size() < 2 || !j[0].is_string()) throw ParseError("cotree: malformed node");
  const auto label = j[0].get<std::string>();
  Cotree t;
  if (label == "join") {
    t.kind = Cotree::Kind::join_node;
  } else if (label == "union") {
    t.kind = Cotree::Kind::union_node;
  } else {
    throw ParseError("cotree: unknown node label " + label);
  }
  for (std::size_t i = 1; i < j.size(); ++i) t.children.push_back(cotree_from_json(j[i]));
  return t;
}

inline json vertex_list(const VertexSet& s) { return s.to_vector(); }

template <std::size_t N>
json vertex_list(const std::array<Vertex, N>& a) {
  return std::vector<Vertex>(a.begin(), a.end());
}

inline json to_json(const P5Witness& w) { return {{"kind", "p5"}, {"vertices", vertex_list(w.path)}}; }
inline json to_json(const P4Witness& w) { return {{"kind", "p4"}, {"vertices", vertex_list(w.path)}}; }
inline json to_json(const F4Witness& w) { return {{"kind", "f4"}, {"vertices", vertex_list(w.vertices)}}; }

inline json to_json(const HomWitness& w) {
  return {{"kind", w.kind == HomWitness::Kind::clique ? "clique" : "independent"},
          {"vertices", vertex_list(w.members)}};
}

inline json to_json(const CographWitness& w) {
  return {{"kind", "cograph"}, {"vertices", vertex_list(w.members)}, {"cotree", cotree_to_json(w.cotree)}};
}

inline json to_json(const PairWitness& w) {
  return {{"kind", "pair"},
          {"left", vertex_list(w.left)},
          {"right", vertex_list(w.right)},
          {"color", to_string(w.color)}};
}

}  // namespace p5hom
