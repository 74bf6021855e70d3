#pragma once

// Checks a witness given as JSON against a graph. Only adjacency and purity
// predicates are consulted.

#include <string>
#include <vector>

#include <json.hpp>

#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"
#include "p5hom/io.hpp"
#include "p5hom/witness.hpp"

namespace p5hom {

struct VerifyReport {
  bool ok = false;
  std::string kind;
  std::string message;
};

namespace detail {

inline VertexSet read_set(const Graph& g, const json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
  VertexSet s(g.order());
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + ": vertices must be integers");
    const auto v = x.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw ParseError(std::string(what) + ": vertex out of range");
    if (s.contains(static_cast<Vertex>(v))) throw ParseError(std::string(what) + ": repeated vertex");
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

template <std::size_t N>
std::array<Vertex, N> read_tuple(const Graph& g, const json& arr) {
  if (!arr.is_array() || arr.size() != N) throw ParseError("vertices: expected " + std::to_string(N) + " entries");
  std::array<Vertex, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    const auto v = arr[i].get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) throw ParseError("vertices: vertex out of range");
    out[i] = static_cast<Vertex>(v);
  }
  return out;
}

}  // namespace detail

inline VerifyReport verify_witness(const Graph& g, const json& input) {
  const json& w = input.contains("witness") ? input.at("witness") : input;
  VerifyReport r;
  try {
    r.kind = w.at("kind").get<std::string>();
    if (r.kind == "p5") {
      r.ok = verify_p5(g, {detail::read_tuple<5>(g, w.at("vertices"))});
    } else if (r.kind == "p4") {
      r.ok = verify_p4(g, {detail::read_tuple<4>(g, w.at("vertices"))});
    } else if (r.kind == "f4") {
      r.ok = verify_f4(g, {detail::read_tuple<4>(g, w.at("vertices"))});
    } else if (r.kind == "clique" || r.kind == "independent") {
      HomWitness h{detail::read_set(g, w.at("vertices"), "vertices"),
                   r.kind == "clique" ? HomWitness::Kind::clique : HomWitness::Kind::independent};
      r.ok = verify_hom(g, h);
    } else if (r.kind == "cograph") {
      CographWitness c{detail::read_set(g, w.at("vertices"), "vertices"), cotree_from_json(w.at("cotree"))};
      r.ok = verify_cograph(g, c);
    } else if (r.kind == "pair") {
      const std::string color = w.at("color").get<std::string>();
      if (color != "red" && color != "blue") throw ParseError("pair color must be red or blue");
      PairWitness p{detail::read_set(g, w.at("left"), "left"), detail::read_set(g, w.at("right"), "right"),
                    color == "red" ? Color::red : Color::blue};
      r.ok = verify_pair(g, p);
    } else {
      throw ParseError("unknown witness kind '" + r.kind + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
  if (!r.ok) r.message = r.kind + " witness does not hold in the graph";
  return r;
}

}  // namespace p5hom
