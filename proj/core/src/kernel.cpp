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

#include "rdom/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rdom/errors.hpp"
#include "rdom/profiles.hpp"
#include "rdom/sparsity.hpp"

namespace rdom {

namespace {

// Groups members of `candidates` by key; groups come out ordered by their
// smallest member, each group ascending.
template <typename Key, typename KeyFn>
std::vector<std::vector<Vertex>> group_by(const VertexSet& candidates,
                                          KeyFn&& key_of) {
  std::unordered_map<Key, std::size_t> index;
  std::vector<std::vector<Vertex>> groups;
  for (Vertex v : candidates) {
    auto [it, inserted] = index.try_emplace(key_of(v), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(v);
  }
  return groups;
}

// Largest group; the earliest (smallest first member) on ties.
std::size_t largest(const std::vector<std::vector<Vertex>>& groups) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < groups.size(); ++i) {
    if (groups[i].size() > groups[best].size()) best = i;
  }
  return best;
}

StageStats stats_of(const RedundancyProbe& p) {
  StageStats s;
  s.stage = "reduce";
  s.core_size = p.core_size;
  s.approx_size = p.approx.size();
  s.closure_size = p.closure.size();
  s.num_classes = p.num_classes;
  s.separator_size = p.separator.size();
  s.selected_size = p.selected.size();
  s.removed = p.removed;
  return s;
}

}  // namespace

std::size_t default_core_target(std::size_t k) {
  const auto log_term = static_cast<std::size_t>(
      std::ceil(std::log2(static_cast<double>(k) + 2.0)));
  return 20 * k * log_term;
}

CoreState::CoreState(DominationInstance instance)
    : inst(std::move(instance)),
      z(VertexSet::range(inst.graph.num_vertices())) {}

bool is_domination_core(const Graph& g, const VertexSet& z, Radius r,
                        OracleLimits limits) {
  const DominationInstance annotated(g, z, r, 0);
  const auto whole = DominationInstance::whole(g, r, 0);
  for (const auto& d : enumerate_min_dominators(annotated, limits)) {
    if (!is_dominator(whole, d)) return false;
  }
  return true;
}

RedundancyProbe find_redundant_vertex(const CoreState& state,
                                      const KernelOptions& options) {
  const Graph& g = state.inst.graph;
  const Radius r = state.inst.r;
  RedundancyProbe probe;
  probe.core_size = state.z.size();
  if (state.z.empty()) return probe;

  const DominationInstance on_core(g, state.z, r, state.inst.k);
  probe.approx = bg_approx_dominator(on_core, options.bg_max_rounds).dominators;

  const std::size_t t =
      options.closure_threshold.value_or(default_closure_threshold(g));
  probe.closure = r_closure(g, probe.approx, 3 * r, t).closure;

  const auto profiles = all_projection_profiles(g, probe.closure, 3 * r);
  const VertexSet outside = set_difference(state.z, probe.closure);
  if (outside.empty()) return probe;

  auto classes = group_by<ProjectionProfile>(
      outside, [&](Vertex v) -> const ProjectionProfile& { return profiles[v]; });
  probe.num_classes = classes.size();
  probe.class_id = largest(classes);
  probe.klass = VertexSet::from_sorted(classes[probe.class_id]);

  const std::size_t s_max =
      options.separator_cap.value_or(default_separator_cap(2 * r));
  const QwResult qw =
      quasi_wide_extract(g, probe.klass, 2 * r, probe.klass.size(), s_max);
  probe.separator = qw.separator;
  probe.scattered = qw.scattered;
  if (probe.scattered.empty()) return probe;

  auto subclasses = group_by<DistanceProfile>(probe.scattered, [&](Vertex v) {
    return distance_profile(g, v, probe.separator, r);
  });
  probe.selected = VertexSet::from_sorted(subclasses[largest(subclasses)]);

  const Vertex candidate = probe.selected.front();
  probe.buy_size = set_union(profiles[candidate].keys(), probe.separator).size();
  if (probe.selected.size() >= probe.buy_size + 2) probe.removed = candidate;
  return probe;
}

CoreOutcome find_core(const DominationInstance& inst,
                      const KernelOptions& options) {
  CoreOutcome out{CoreState(inst), std::nullopt, {}};
  CoreState& state = out.state;
  const Graph& g = inst.graph;
  const std::size_t target = options.target.value_or(default_core_target(inst.k));
  const bool can_verify =
      options.verify && g.num_vertices() <= options.verify_limits.max_vertices;

  // |Z| drops by one per iteration, so this runs at most n + 1 times.
  for (;;) {
    auto witness =
        greedy_scattered_lower_bound(DominationInstance(g, state.z, inst.r, inst.k));
    if (witness.size() > inst.k) {
      // k + 1 scattered members already certify the rejection.
      std::vector<Vertex> first(witness.begin(), witness.begin() + inst.k + 1);
      out.rejection_witness = VertexSet::from_sorted(std::move(first));
      return out;
    }
    if (state.z.size() <= target) return out;

    RedundancyProbe probe = find_redundant_vertex(state, options);
    out.probes.push_back(probe);
    if (!probe.removed) return out;

    state.z = state.z.without(*probe.removed);
    state.trace.push_back(std::move(probe));
    if (can_verify) {
      ++state.verified_steps;
      if (!is_domination_core(g, state.z, inst.r, options.verify_limits)) {
        ++state.verification_failures;
      }
    }
  }
}

std::string KernelResult::verdict_string() const {
  return rejected() ? "rejected" : "kernel";
}

KernelResult build_kernel_from_core(const Graph& g, const VertexSet& z,
                                    Radius r) {
  g.check_vertices(z);
  const auto profiles = all_projection_profiles(g, z, r);
  const VertexSet outside =
      set_difference(VertexSet::range(g.num_vertices()), z);
  auto classes = group_by<ProjectionProfile>(
      outside, [&](Vertex v) -> const ProjectionProfile& { return profiles[v]; });

  std::vector<Vertex> keep(z.begin(), z.end());
  for (const auto& c : classes) keep.push_back(c.front());
  const VertexSet closed = short_paths_closure(g, VertexSet(std::move(keep)), r);
  InducedSubgraph sub = induced_subgraph(g, closed);

  KernelResult result;
  result.g_prime = sub.graph;
  result.z_prime = sub.restrict(z);
  result.to_parent = std::move(sub.to_parent);
  result.input_vertices = g.num_vertices();
  result.core_size = z.size();

  StageStats s;
  s.stage = "kernel";
  s.core_size = z.size();
  s.num_classes = classes.size();
  result.stats.push_back(s);
  return result;
}

KernelResult kernelize(const DominationInstance& inst,
                       const KernelOptions& options) {
  CoreOutcome core = find_core(inst, options);

  std::vector<StageStats> stats;
  for (const auto& p : core.probes) stats.push_back(stats_of(p));

  KernelResult result;
  if (core.rejection_witness) {
    result.verdict = KernelResult::Verdict::kRejected;
    result.rejection_witness = std::move(core.rejection_witness);
    result.input_vertices = inst.graph.num_vertices();
    result.core_size = core.state.z.size();
    StageStats s;
    s.stage = "reject";
    s.core_size = core.state.z.size();
    stats.push_back(s);
  } else {
    result = build_kernel_from_core(inst.graph, core.state.z, inst.r);
    stats.insert(stats.end(), result.stats.begin(), result.stats.end());
  }
  result.stats = std::move(stats);
  result.verified_steps = core.state.verified_steps;
  result.verification_failures = core.state.verification_failures;
  return result;
}

Graph annotate_to_plain(const Graph& g_prime, const VertexSet& z, Radius r) {
  g_prime.check_vertices(z);
  if (r < 1) throw ContractViolation("gadget radius must be >= 1");
  GraphBuilder b(g_prime.num_vertices());
  for (const auto& [u, v] : g_prime.edges()) b.add_edge(u, v);

  // Path of length r from `from`, through r - 1 fresh vertices, to `to`.
  const auto connect = [&](Vertex from, std::optional<Vertex> to) {
    Vertex prev = from;
    for (Radius i = 1; i < r; ++i) {
      const Vertex mid = b.add_vertex();
      b.add_edge(prev, mid);
      prev = mid;
    }
    const Vertex end = to ? *to : b.add_vertex();
    b.add_edge(prev, end);
  };

  const Vertex w = b.add_vertex();
  connect(w, std::nullopt);  // ends at the fresh w'
  for (Vertex v = 0; v < g_prime.num_vertices(); ++v) {
    if (!z.contains(v)) connect(w, v);
  }
  return b.build();
}

}  // namespace rdom
