#pragma once

// Manifest-driven benchmark: generate each instance, extract a cograph (or a
// homogeneous set), and tabulate the result against f(n) and es_floor(n).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "p5hom/detect.hpp"
#include "p5hom/error.hpp"
#include "p5hom/extract.hpp"
#include "p5hom/generators.hpp"
#include "p5hom/growth.hpp"
#include "p5hom/io.hpp"
#include "p5hom/oracle.hpp"

namespace p5hom {

struct BenchInstance {
  std::string id;
  std::string generator;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  json params = json::object();
};

struct BenchRow {
  std::string instance_id;
  std::size_t n = 0;
  std::string generator;
  std::size_t size = 0;  // cograph (or homogeneous set) found
  long double f_n = 0;
  std::size_t es_floor = 0;
  double runtime_ms = 0;
  bool p5_found = false;
  std::size_t fallbacks_fired = 0;
  std::size_t t = 0;
};

// Generator names accepted in manifests and by `p5hom gen`.
inline Graph generate(const std::string& name, std::size_t n, std::uint64_t seed, const json& params = json::object()) {
  auto param = [&](const char* key, auto fallback) {
    return params.contains(key) ? params.at(key).get<decltype(fallback)>() : fallback;
  };
  if (name == "gnp") return gnp(n, param("p", 0.5), seed);
  if (name == "cograph") return gen_cograph(n, seed);
  if (name == "split") {
    std::optional<std::size_t> k;
    if (params.contains("k")) k = params.at("k").get<std::size_t>();
    return gen_split(n, seed, k, param("p", 0.5));
  }
  if (name == "threshold") return gen_threshold(n, seed);
  if (name == "c5_blowup") {
    std::optional<std::vector<std::size_t>> profile;
    if (params.contains("profile")) profile = params.at("profile").get<std::vector<std::size_t>>();
    const Filler fill = param("fill", std::string("cograph")) == "edgeless" ? Filler::edgeless : Filler::cograph;
    return gen_unbalanced_c5_blowup(n, seed, profile, fill);
  }
  if (name == "f4_free") return gen_f4_free(n, seed);
  if (name == "substitution") return gen_substitution(n, seed, param("max_host", std::size_t{6}));
  if (name == "repair") {
    auto g = gen_repair_p5_free(n, param("p", 0.2), seed, param("max_iters", std::size_t{100000}));
    if (!g) throw LimitError("repair generator: iteration budget exhausted");
    return *g;
  }
  if (name == "planted_p5") return gen_planted_p5(n, seed);
  throw ParseError("unknown generator '" + name + "'");
}

inline std::vector<BenchInstance> parse_manifest(const json& j) {
  std::vector<BenchInstance> out;
  try {
    for (const auto& item : j.at("instances")) {
      BenchInstance inst;
      inst.id = item.at("id").is_string() ? item.at("id").get<std::string>() : item.at("id").dump();
      inst.generator = item.at("generator").get<std::string>();
      inst.n = item.at("n").get<std::size_t>();
      inst.seed = item.value("seed", std::uint64_t{0});
      if (item.contains("params")) inst.params = item.at("params");
      out.push_back(std::move(inst));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  return out;
}

// params.task: "extract" (default) or "hom" (exact when small enough).
inline BenchRow run_instance(const BenchInstance& inst, const GrowthFunction& gf) {
  BenchRow row;
  row.instance_id = inst.id;
  row.n = inst.n;
  row.generator = inst.generator;
  row.f_n = gf.f(static_cast<long double>(inst.n));
  row.es_floor = inst.n == 0 ? 0 : es_floor(inst.n);
  Graph g = generate(inst.generator, inst.n, inst.seed, inst.params);
  const auto start = std::chrono::steady_clock::now();
  const std::string task = inst.params.value("task", std::string("extract"));
  if (task == "hom") {
    row.size = g.order() <= limits().hom ? hom_exact(g).size() : greedy_hom(g).size();
  } else if (g.order() > 0) {
    ExtractOptions opt;
    opt.gf = gf;
    auto r = extract_cograph(g, opt);
    row.size = r.cograph.size();
    row.p5_found = r.p5.has_value();
    for (const auto& [k, v] : r.trace.fallbacks) row.fallbacks_fired += v;
    row.t = r.trace.t;
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

inline std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances, const GrowthFunction& gf,
                                       unsigned jobs = 1) {
  std::vector<BenchRow> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        rows[i] = run_instance(instances[i], gf);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) { return a.instance_id < b.instance_id; });
  return rows;
}

inline constexpr const char* bench_header =
    "instance_id,n,generator,hom_or_cograph_size,f_n,es_floor,runtime_ms,p5_found,fallbacks_fired,t";

inline void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << bench_header << '\n';
  char f[64], ms[64];
  for (const auto& r : rows) {
    std::snprintf(f, sizeof f, "%.6f", static_cast<double>(r.f_n));
    std::snprintf(ms, sizeof ms, "%.3f", r.runtime_ms);
    out << r.instance_id << ',' << r.n << ',' << r.generator << ',' << r.size << ',' << f << ',' << r.es_floor << ','
        << ms << ',' << (r.p5_found ? 1 : 0) << ',' << r.fallbacks_fired << ',' << r.t << '\n';
  }
}

}  // namespace p5hom
