// p5hom command-line front end.
//
// Exit codes: 0 success or pattern absent, 10 pattern found, 11 pair finder
// fell back to the trivial non-edge pair, 12 pair finder diagnostic,
// 2 usage, 3 verification failure, 4 input / limit / precondition error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p5hom/p5hom.hpp"

namespace {

using namespace p5hom;

enum Exit : int {
  ok = 0,
  found = 10,
  trivial = 11,
  diagnostic = 12,
  usage = 2,
  rejected = 3,
  failure = 4,
};

struct Common {
  std::string in;
  std::string out;
  std::string c = "1/16";
};

void emit(const Common& common, const std::string& text) {
  if (common.out.empty() || common.out == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(common.out);
  if (!f) throw ParseError("cannot write " + common.out);
  f << text << '\n';
}

void emit(const Common& common, const json& j) { emit(common, j.dump(2)); }

Graph input_graph(const Common& common) {
  if (common.in.empty() || common.in == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_graph(ss.str());
  }
  return load_graph(common.in);
}

GrowthFunction growth(const Common& common) { return GrowthFunction{parse_growth_constant(common.c)}; }

int cmd_detect(const Common& common, const std::string& pattern) {
  const Graph g = input_graph(common);
  json j{{"pattern", pattern}, {"n", g.order()}};
  bool hit = false;
  if (pattern == "p5") {
    auto w = find_induced_p5(g);
    hit = w.has_value();
    if (w) j["witness"] = to_json(*w);
  } else if (pattern == "f4") {
    auto w = find_induced_f4(g);
    hit = w.has_value();
    if (w) j["witness"] = to_json(*w);
    j["count"] = count_f4_total(g);
  } else {
    // p4: report the P4 obstruction, or the cotree when there is none.
    auto r = cograph_recognize(g);
    if (auto* p4 = std::get_if<P4Witness>(&r)) {
      hit = true;
      j["witness"] = to_json(*p4);
    } else {
      j["witness"] = to_json(CographWitness{g.vertices(), std::get<Cotree>(r)});
    }
  }
  j["found"] = hit;
  emit(common, j);
  return hit ? found : ok;
}

std::size_t default_m(const Graph& g) {
  if (g.order() <= limits().hom) return hom_exact(g).size();
  return greedy_hom(g).size();
}

int cmd_pair(const Common& common, std::optional<std::size_t> m, bool force, unsigned jobs) {
  const Graph g = input_graph(common);
  const std::size_t mm = m ? *m : default_m(g);
  PairFinderOptions opt;
  opt.force_pipeline = force;
  opt.jobs = jobs;
  const PairResult r = find_anticomplete_pair(g, mm, opt);
  emit(common, to_json(r));
  switch (r.kind) {
    case PairResult::Kind::pair: return ok;
    case PairResult::Kind::trivial_nonedge: return trivial;
    case PairResult::Kind::p5: return found;
    case PairResult::Kind::diagnostic: return diagnostic;
  }
  return failure;
}

int cmd_extract(const Common& common) {
  const Graph g = input_graph(common);
  ExtractOptions opt;
  opt.gf = growth(common);
  const ExtractResult r = extract_cograph(g, opt);
  json j{{"n", g.order()},
         {"size", r.cograph.size()},
         {"f_n", static_cast<double>(opt.gf.f(static_cast<long double>(g.order())))},
         {"es_floor", es_floor(g.order())},
         {"witness", to_json(r.cograph)},
         {"trace", to_json(r.trace)}};
  if (r.p5) j["p5"] = to_json(*r.p5);
  emit(common, j);
  return r.p5 ? found : ok;
}

int cmd_hom(const Common& common) {
  const Graph g = input_graph(common);
  const bool exact = g.order() <= limits().hom;
  const HomWitness h = exact ? hom_exact(g) : greedy_hom(g);
  emit(common, json{{"n", g.order()}, {"exact", exact}, {"size", h.size()}, {"es_floor", es_floor(std::max<std::size_t>(g.order(), 1))},
                    {"witness", to_json(h)}});
  return ok;
}

json parse_params(const std::vector<std::string>& kv) {
  json p = json::object();
  for (const auto& item : kv) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    json parsed = json::parse(value, nullptr, false);
    p[key] = parsed.is_discarded() ? json(value) : parsed;
  }
  return p;
}

int cmd_gen(const Common& common, const std::string& generator, std::size_t n, std::uint64_t seed,
            std::size_t count, const std::vector<std::string>& params) {
  const json p = parse_params(params);
  std::string text;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) text += '\n';
    text += to_graph6(generate(generator, n, seed + i, p));
  }
  emit(common, text);
  return ok;
}

int cmd_verify(const Common& common, const std::string& graph, const std::string& witness) {
  const Graph g = load_graph(graph);
  json w;
  try {
    w = json::parse(read_file(witness));
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
  VerifyReport r;
  try {
    r = verify_witness(g, w);
  } catch (const ParseError& e) {
    r = {false, "", e.what()};
  }
  json j{{"ok", r.ok}, {"kind", r.kind}};
  if (!r.message.empty()) j["message"] = r.message;
  emit(common, j);
  return r.ok ? ok : rejected;
}

int cmd_bench(const Common& common, const std::string& manifest, unsigned jobs) {
  json m;
  try {
    m = json::parse(read_file(manifest));
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  const auto rows = run_bench(parse_manifest(m), growth(common), jobs);
  std::ostringstream csv;
  write_csv(csv, rows);
  std::string text = csv.str();
  text.pop_back();
  emit(common, text);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for induced P5, F4 and cographs; anticomplete pairs; cograph extraction"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--c", common.c, "growth constant c in f(x) = 2^(c (log x)^(2/3))")->capture_default_str();

  auto with_io = [&](CLI::App* sub) {
    sub->add_option("--in", common.in, "graph file (graph6 or JSON; '-' for stdin)");
    sub->add_option("--out", common.out, "output file (default stdout)");
    sub->add_option("--c", common.c, "growth constant")->capture_default_str();
  };

  std::string pattern = "p5";
  auto* detect = app.add_subcommand("detect", "find an induced P5, F4 or P4");
  with_io(detect);
  detect->add_option("--pattern", pattern)->check(CLI::IsMember({"p5", "f4", "p4"}))->capture_default_str();

  std::optional<std::size_t> m;
  bool force = false;
  unsigned jobs = 1;
  auto* pair = app.add_subcommand("pair", "anticomplete pair with red-connected sides");
  with_io(pair);
  pair->add_option("--m", m, "homogeneous-set size bound (default: computed)")->check(CLI::PositiveNumber);
  pair->add_flag("--force", force, "run the counting pipeline even when n <= m^13");
  pair->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* extract = app.add_subcommand("extract", "extract an induced cograph");
  with_io(extract);

  auto* hom = app.add_subcommand("hom", "largest clique or independent set");
  with_io(hom);

  std::string generator;
  std::size_t n = 0, count = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "generate graphs as graph6 lines");
  gen->add_option("generator", generator)->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--count", count, "graphs with consecutive seeds")->capture_default_str();
  gen->add_option("--param", params, "generator parameter key=value (JSON values)");
  gen->add_option("--out", common.out);

  std::string graph, witness;
  auto* verify = app.add_subcommand("verify", "check a witness against a graph");
  verify->add_option("--graph", graph)->required();
  verify->add_option("--witness", witness)->required();
  verify->add_option("--out", common.out);

  std::string manifest;
  auto* bench = app.add_subcommand("bench", "run a manifest and write CSV");
  bench->add_option("--manifest", manifest)->required();
  bench->add_option("--out", common.out);
  bench->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  bench->add_option("--c", common.c)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*detect) return cmd_detect(common, pattern);
    if (*pair) return cmd_pair(common, m, force, jobs);
    if (*extract) return cmd_extract(common);
    if (*hom) return cmd_hom(common);
    if (*gen) return cmd_gen(common, generator, n, seed, count, params);
    if (*verify) return cmd_verify(common, graph, witness);
    if (*bench) return cmd_bench(common, manifest, jobs);
  } catch (const ParseError& e) {
    std::cerr << "p5hom: " << e.what() << '\n';
    return failure;
  } catch (const LimitError& e) {
    std::cerr << "p5hom: size limit: " << e.what() << " (raise it with P5HOM_LIMITS)\n";
    return failure;
  } catch (const PreconditionError& e) {
    std::cerr << "p5hom: " << e.what() << '\n';
    return failure;
  }
  return usage;
}
