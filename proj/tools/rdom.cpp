// Copyright 2026 The rdom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdint>
#include <fstream>
#include <limits>
#include <memory>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdom/bench.hpp"
#include "rdom/csv.hpp"
#include "rdom/domset.hpp"
#include "rdom/errors.hpp"
#include "rdom/generators.hpp"
#include "rdom/graph.hpp"
#include "rdom/kernel.hpp"
#include "rdom/orderings.hpp"
#include "rdom/profiles.hpp"
#include "rdom/sparsity.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kCap = 3 };

struct Globals {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  bool verify = false;
};

// Thrown for bad flag values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rdom::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rdom::Graph read_graph(const std::string& path) {
  try {
    return rdom::parse_edge_list(slurp(path));
  } catch (const rdom::ParseError& e) {
    throw rdom::ParseError(0, path + ": " + e.what());
  }
}

void check_members(const rdom::Graph& g, const rdom::VertexSet& s,
                   const std::string& what) {
  if (!s.empty() && s.back() >= g.num_vertices()) {
    throw rdom::IndexError(what + " mentions vertex " +
                           std::to_string(s.back()) + " but the graph has " +
                           std::to_string(g.num_vertices()) + " vertices");
  }
}

// A file of ids, "all", or "random:<size>:<seed>".
rdom::VertexSet read_set(const rdom::Graph& g, const std::string& spec) {
  const std::size_t n = g.num_vertices();
  if (spec == "all") return rdom::VertexSet::range(n);
  if (spec.rfind("random:", 0) == 0) {
    std::size_t size = 0;
    std::uint64_t seed = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "random:%zu:%lu%c", &size, &seed, &tail) !=
        2) {
      throw UsageError("expected random:<size>:<seed>, got '" + spec + "'");
    }
    if (size > n) {
      throw rdom::ContractViolation("random set of size " +
                                    std::to_string(size) + " exceeds n=" +
                                    std::to_string(n));
    }
    return rdom::random_subset(n, size, seed);
  }
  rdom::VertexSet s = rdom::parse_vertex_set(slurp(spec));
  check_members(g, s, spec);
  return s;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw rdom::Error("cannot write '" + path + "'");
  return file;
}

std::string to_str(std::size_t v) { return std::to_string(v); }
std::string to_str(bool b) { return b ? "true" : "false"; }

rdom::Radius to_radius(std::uint64_t r) {
  if (r > 64) throw UsageError("--r above 64 is not supported");
  return static_cast<rdom::Radius>(r);
}

// ---- subcommands ---------------------------------------------------------

void add_gen(CLI::App& app, const Globals& globals) {
  auto* cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  auto family = std::make_shared<std::string>();
  auto params = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("--family", *family,
                  "grid|path|cycle|star|spider|random_bounded_degree|"
                  "subdivision|subset_gadget|tree|complete")
      ->required();
  cmd->add_option("--params", *params, "comma separated key=value list");
  cmd->add_option("-o,--out", *out, "output path, '-' for stdout");
  cmd->callback([=, &globals] {
    rdom::GenSpec spec;
    try {
      spec.family = rdom::parse_family(*family);
      spec.params = rdom::parse_params(*params);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    spec.seed = globals.seed;
    const rdom::Graph g = rdom::generate(spec);
    std::ofstream file;
    rdom::write_edge_list(open_out(*out, file), g);
  });
}

void add_complexity(CLI::App& app) {
  auto* cmd = app.add_subcommand("complexity", "Neighborhood and profile counters");
  auto graph = std::make_shared<std::string>();
  auto r = std::make_shared<std::uint64_t>(1);
  auto set = std::make_shared<std::string>("all");
  auto metric = std::make_shared<std::string>("nu");
  auto cap = std::make_shared<std::size_t>(rdom::kMaxVcCap);
  cmd->add_option("graph", *graph, "edge list file, '-' for stdin")->required();
  cmd->add_option("--r", *r, "radius");
  cmd->add_option("--set", *set, "file of ids, 'all', or random:<size>:<seed>");
  cmd->add_option("--metric", *metric)
      ->check(CLI::IsMember({"nu", "nuhat", "mu", "muhat", "vc"}));
  cmd->add_option("--vc-cap", *cap, "largest dimension searched (<= 12)")
      ->check(CLI::Range(std::size_t{0}, rdom::kMaxVcCap));
  cmd->callback([=] {
    const rdom::Graph g = read_graph(*graph);
    const rdom::VertexSet a = read_set(g, *set);
    const rdom::Radius radius = to_radius(*r);
    std::string value;
    if (*metric == "nu") {
      value = to_str(rdom::nu_r(g, a, radius));
    } else if (*metric == "nuhat") {
      value = to_str(rdom::nu_hat_r(g, a, radius));
    } else if (*metric == "mu") {
      value = to_str(rdom::mu_r(g, a, radius));
    } else if (*metric == "muhat") {
      value = to_str(rdom::mu_hat_r(g, a, radius));
    } else {
      value = rdom::vc_dimension(rdom::neighborhood_family(g, a, radius), *cap)
                  .to_string();
    }
    rdom::CsvWriter csv(std::cout,
                        {"graph", "n", "m", "|A|", "r", "metric", "value"});
    csv.row({*graph, to_str(g.num_vertices()), to_str(g.num_edges()),
             to_str(a.size()), to_str(std::size_t{radius}), *metric, value});
  });
}

void add_wcol(CLI::App& app) {
  auto* cmd = app.add_subcommand("wcol", "Weak coloring number of the degeneracy order");
  auto graph = std::make_shared<std::string>();
  auto r = std::make_shared<std::uint64_t>(1);
  auto exact = std::make_shared<bool>(false);
  cmd->add_option("graph", *graph, "edge list file, '-' for stdin")->required();
  cmd->add_option("--r", *r, "radius");
  cmd->add_flag("--exact", *exact, "also compute the exact value (n <= 9)");
  cmd->callback([=] {
    const rdom::Graph g = read_graph(*graph);
    const rdom::Radius radius = to_radius(*r);
    const auto heuristic =
        rdom::wcol_of_order(g, rdom::degeneracy_order(g), radius);
    std::string exact_value;
    if (*exact) exact_value = to_str(rdom::wcol_exact(g, radius).value);
    rdom::CsvWriter csv(std::cout,
                        {"graph", "r", "heuristic_value", "exact_value"});
    csv.row({*graph, to_str(std::size_t{radius}), to_str(heuristic), exact_value});
  });
}

void add_qw(CLI::App& app) {
  auto* cmd = app.add_subcommand("qw", "Extract a scattered set behind a small separator");
  auto graph = std::make_shared<std::string>();
  auto r = std::make_shared<std::uint64_t>(1);
  auto set = std::make_shared<std::string>("all");
  auto m = std::make_shared<std::size_t>(1);
  auto smax = std::make_shared<std::optional<std::size_t>>();
  cmd->add_option("graph", *graph, "edge list file, '-' for stdin")->required();
  cmd->add_option("--r", *r, "radius");
  cmd->add_option("--set", *set, "A: file of ids, 'all', or random:<size>:<seed>");
  cmd->add_option("--m", *m, "required size of the scattered set")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--smax", *smax, "separator cap (default 10r)");
  cmd->callback([=] {
    const rdom::Graph g = read_graph(*graph);
    const rdom::VertexSet a = read_set(g, *set);
    const rdom::Radius radius = to_radius(*r);
    const std::size_t cap = smax->value_or(rdom::default_separator_cap(radius));
    const rdom::QwResult res = rdom::quasi_wide_extract(g, a, radius, *m, cap);
    rdom::CsvWriter csv(std::cout, {"graph", "n", "|A|", "r", "m", "smax", "|S|",
                                    "|B|", "rounds", "success"});
    csv.row({*graph, to_str(g.num_vertices()), to_str(a.size()),
             to_str(std::size_t{radius}), to_str(*m), to_str(cap),
             to_str(res.separator.size()), to_str(res.scattered.size()),
             to_str(res.rounds), to_str(res.success)});
  });
}

void add_closure(CLI::App& app) {
  auto* cmd = app.add_subcommand("closure", "r-closure and short-paths closure of a set");
  auto graph = std::make_shared<std::string>();
  auto r = std::make_shared<std::uint64_t>(1);
  auto set = std::make_shared<std::string>();
  auto t = std::make_shared<std::optional<std::size_t>>();
  cmd->add_option("graph", *graph, "edge list file, '-' for stdin")->required();
  cmd->add_option("--r", *r, "radius");
  cmd->add_option("--set", *set, "X: file of ids, 'all', or random:<size>:<seed>")
      ->required();
  cmd->add_option("--t", *t, "projection threshold, at least 2 (default from density)")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  cmd->callback([=] {
    const rdom::Graph g = read_graph(*graph);
    const rdom::VertexSet x = read_set(g, *set);
    const rdom::Radius radius = to_radius(*r);
    const std::size_t threshold =
        t->value_or(rdom::default_closure_threshold(g));
    const rdom::ClosureResult cl = rdom::r_closure(g, x, radius, threshold);
    const rdom::VertexSet paths = rdom::short_paths_closure(g, x, radius);
    rdom::CsvWriter csv(std::cout, {"graph", "n", "|X|", "r", "t", "|Y|",
                                    "added", "|X_paths|"});
    csv.row({*graph, to_str(g.num_vertices()), to_str(x.size()),
             to_str(std::size_t{radius}), to_str(threshold),
             to_str(cl.closure.size()), to_str(cl.added.size()),
             to_str(paths.size())});
  });
}

void add_solve(CLI::App& app) {
  auto* cmd = app.add_subcommand("solve", "Compute a (Z,r)-dominator");
  auto graph = std::make_shared<std::string>();
  auto r = std::make_shared<std::uint64_t>(1);
  auto k = std::make_shared<std::optional<std::size_t>>();
  auto z = std::make_shared<std::string>("all");
  auto method = std::make_shared<std::string>("exact");
  auto cap = std::make_shared<std::size_t>(rdom::kExactOracleLimits.max_vertices);
  auto out = std::make_shared<std::string>();
  cmd->add_option("graph", *graph, "edge list file, '-' for stdin")->required();
  cmd->add_option("--r", *r, "radius")->check(CLI::PositiveNumber);
  cmd->add_option("--k", *k, "budget; adds within_k to the output");
  cmd->add_option("--z", *z, "dominatees: file of ids or 'all'");
  cmd->add_option("--method", *method)
      ->check(CLI::IsMember({"exact", "greedy", "bg"}));
  cmd->add_option("--oracle-cap", *cap, "vertex cap of the exact solver");
  cmd->add_option("--out", *out, "write the dominator ids here");
  cmd->callback([=] {
    const rdom::Graph g = read_graph(*graph);
    const rdom::VertexSet zs = read_set(g, *z);
    const rdom::DominationInstance inst(g, zs, to_radius(*r), k->value_or(0));
    rdom::DominatorResult res;
    if (*method == "exact") {
      res = rdom::exact_min_dominator(inst, rdom::OracleLimits{*cap});
    } else if (*method == "greedy") {
      res = rdom::greedy_dominator(inst);
    } else {
      res = rdom::bg_approx_dominator(inst);
    }
    const bool valid = rdom::is_dominator(inst, res.dominators);
    std::cout << "size=" << res.dominators.size() << " valid=" << to_str(valid)
              << " optimal=" << to_str(res.optimal);
    if (*k) std::cout << " within_k=" << to_str(res.dominators.size() <= **k);
    std::cout << '\n';
    if (!out->empty()) {
      std::ofstream file;
      rdom::write_vertex_set(open_out(*out, file), res.dominators);
    }
  });
}

void add_kernelize(CLI::App& app, const Globals& globals) {
  auto* cmd = app.add_subcommand("kernelize", "Reduce a distance-r domination instance");
  auto graph = std::make_shared<std::string>();
  auto r = std::make_shared<std::uint64_t>(1);
  auto k = std::make_shared<std::size_t>(0);
  auto target = std::make_shared<std::optional<std::size_t>>();
  auto t = std::make_shared<std::optional<std::size_t>>();
  auto eps = std::make_shared<double>(0.5);
  auto out = std::make_shared<std::string>("kernel.el");
  auto z_out = std::make_shared<std::string>();
  auto stats = std::make_shared<std::string>();
  cmd->add_option("graph", *graph, "edge list file, '-' for stdin")->required();
  cmd->add_option("--r", *r, "radius")->check(CLI::PositiveNumber);
  cmd->add_option("--k", *k, "budget")->required();
  cmd->add_option("--target", *target,
                  "stop once |Z| is at most this (default 20k*ceil(log2(k+2)))");
  cmd->add_option("--t", *t, "closure threshold, at least 2")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  cmd->add_option("--eps", *eps, "label copied to the summary line only");
  cmd->add_option("-o,--out", *out, "kernel edge list path");
  cmd->add_option("--z-out", *z_out, "Z' path (default <out>.z)");
  cmd->add_option("--stats", *stats, "per-stage CSV path (default <out>.stats.csv)");
  cmd->callback([=, &globals] {
    const rdom::Graph g = read_graph(*graph);
    rdom::KernelOptions options;
    options.target = *target;
    options.closure_threshold = *t;
    options.verify = globals.verify;
    const rdom::KernelResult res = rdom::kernelize(
        rdom::DominationInstance::whole(g, to_radius(*r), *k), options);

    std::ofstream stats_file(stats->empty() ? *out + ".stats.csv" : *stats);
    if (!stats_file) throw rdom::Error("cannot write stats file");
    rdom::CsvWriter csv(stats_file, {"stage", "|Z|", "|X|", "|X_cl|", "classes",
                                     "|S|", "|R|", "removed"});
    for (const auto& s : res.stats) {
      csv.row({s.stage, to_str(s.core_size), to_str(s.approx_size),
               to_str(s.closure_size), to_str(s.num_classes),
               to_str(s.separator_size), to_str(s.selected_size),
               s.removed ? std::to_string(*s.removed) : std::string()});
    }

    std::cout << "verdict=" << res.verdict_string()
              << " n=" << g.num_vertices() << " core=" << res.core_size;
    if (res.rejected()) {
      std::cout << " witness=" << res.rejection_witness->size();
    } else {
      std::ofstream el(*out);
      if (!el) throw rdom::Error("cannot write '" + *out + "'");
      rdom::write_edge_list(el, res.g_prime);
      std::ofstream zf(z_out->empty() ? *out + ".z" : *z_out);
      if (!zf) throw rdom::Error("cannot write Z' file");
      rdom::write_vertex_set(zf, res.z_prime);
      std::cout << " kernel_n=" << res.g_prime.num_vertices()
                << " kernel_m=" << res.g_prime.num_edges()
                << " z_prime=" << res.z_prime.size();
    }
    if (globals.verify) {
      std::cout << " verified_steps=" << res.verified_steps
                << " verification_failures=" << res.verification_failures;
    }
    std::cout << " eps=" << *eps << '\n';
    if (res.verification_failures > 0) {
      throw rdom::ContractViolation("oracle rejected a core removal");
    }
  });
}

void add_bench(CLI::App& app, const Globals& globals) {
  auto* cmd = app.add_subcommand("bench", "Run a kernelization plan and emit CSV");
  auto plan = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("plan", *plan, "plan file, '-' for stdin")->required();
  cmd->add_option("-o,--out", *out, "CSV path, '-' for stdout");
  cmd->callback([=, &globals] {
    std::vector<rdom::BenchEntry> entries;
    try {
      entries = rdom::parse_bench_plan(slurp(*plan));
    } catch (const rdom::ParseError& e) {
      throw rdom::ParseError(0, *plan + ": " + e.what());
    }
    std::ofstream file;
    rdom::run_bench(entries, open_out(*out, file), globals.workers,
                    globals.verify);
  });
}

void add_gadget(CLI::App& app) {
  auto* cmd = app.add_subcommand("gadget", "Turn an annotated instance into a plain one");
  auto graph = std::make_shared<std::string>();
  auto z = std::make_shared<std::string>();
  auto r = std::make_shared<std::uint64_t>(1);
  auto out = std::make_shared<std::string>("-");
  cmd->add_option("graph", *graph, "edge list file, '-' for stdin")->required();
  cmd->add_option("--z", *z, "file of Z ids, or 'all'")->required();
  cmd->add_option("--r", *r, "radius")->check(CLI::PositiveNumber);
  cmd->add_option("-o,--out", *out, "output path, '-' for stdout");
  cmd->callback([=] {
    const rdom::Graph g = read_graph(*graph);
    const rdom::VertexSet zs = read_set(g, *z);
    std::ofstream file;
    rdom::write_edge_list(open_out(*out, file),
                          rdom::annotate_to_plain(g, zs, to_radius(*r)));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-r dominating set kernelization toolkit"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "seed for generators and random sets");
  app.add_option("--workers", globals.workers, "worker threads for bench")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verify", globals.verify,
               "check every core removal with the exact oracle (small graphs)");

  add_gen(app, globals);
  add_complexity(app);
  add_wcol(app);
  add_qw(app);
  add_closure(app);
  add_solve(app);
  add_kernelize(app, globals);
  add_bench(app, globals);
  add_gadget(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "rdom: " << e.what() << '\n';
    return kUsage;
  } catch (const rdom::CapExceeded& e) {
    std::cerr << "rdom: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "rdom: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}
