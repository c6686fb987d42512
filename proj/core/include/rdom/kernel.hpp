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

#ifndef RDOM_KERNEL_HPP_
#define RDOM_KERNEL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rdom/domset.hpp"
#include "rdom/graph.hpp"

namespace rdom {

struct KernelOptions {
  // Stop shrinking the core once |Z| <= target. Unset means
  // default_core_target(k).
  std::optional<std::size_t> target;
  // Closure threshold t for X_cl. Unset means default_closure_threshold(G).
  std::optional<std::size_t> closure_threshold;
  // Separator cap for the quasi-wide step. Unset means
  // default_separator_cap(2r).
  std::optional<std::size_t> separator_cap;
  std::size_t bg_max_rounds = kDefaultBgRounds;
  // Check the core property with the enumeration oracle after every removal
  // (only on graphs within verify_limits).
  bool verify = false;
  OracleLimits verify_limits = kEnumerationLimits;
};

// 20 * k * ceil(log2(k + 2)).
std::size_t default_core_target(std::size_t k);

// One attempt to find a dominatee that can leave the core. Holds every
// intermediate set so that the exchange argument can be re-checked.
struct RedundancyProbe {
  std::size_t core_size = 0;
  VertexSet approx;   // X, a (Z, r)-dominator
  VertexSet closure;  // X_cl = cl_{3r}(X)
  std::size_t num_classes = 0;
  std::size_t class_id = 0;  // index of kappa among classes, by smallest member
  VertexSet klass;           // kappa
  VertexSet separator;       // S
  VertexSet scattered;       // L, 2r-independent in G - S
  VertexSet selected;        // R, equal r-distance profiles on S
  // |M_{3r}(z, X_cl) ∪ S| for the candidate z.
  std::size_t buy_size = 0;
  std::optional<Vertex> removed;
};

struct CoreState {
  DominationInstance inst;
  VertexSet z;
  std::vector<RedundancyProbe> trace;  // accepted removals, in order
  std::size_t verified_steps = 0;
  std::size_t verification_failures = 0;

  explicit CoreState(DominationInstance instance);
};

// Z is an r-domination core when every minimum (Z, r)-dominator r-dominates
// all of G. Brute force; throws CapExceeded past the limits.
bool is_domination_core(const Graph& g, const VertexSet& z, Radius r,
                        OracleLimits limits = kEnumerationLimits);

// Returns a probe whose `removed` is set when the exchange inequality
// |R| >= |M_{3r}(z, X_cl) ∪ S| + 2 holds for the lowest-id z in R.
RedundancyProbe find_redundant_vertex(const CoreState& state,
                                      const KernelOptions& options = {});

struct CoreOutcome {
  CoreState state;
  // Set when the instance was rejected: the first k + 1 members (ascending)
  // of a greedy subset of Z with pairwise distances above 2r.
  std::optional<VertexSet> rejection_witness;
  // The last probe, including the failed one that stopped the loop.
  std::vector<RedundancyProbe> probes;
};

// Starts from Z = V(G) and removes redundant dominatees until none is found
// or |Z| <= target.
CoreOutcome find_core(const DominationInstance& inst,
                      const KernelOptions& options = {});

struct StageStats {
  std::string stage;
  std::size_t core_size = 0;
  std::size_t approx_size = 0;
  std::size_t closure_size = 0;
  std::size_t num_classes = 0;
  std::size_t separator_size = 0;
  std::size_t selected_size = 0;
  std::optional<Vertex> removed;
};

struct KernelResult {
  enum class Verdict { kKernel, kRejected };

  Verdict verdict = Verdict::kKernel;
  Graph g_prime;
  // Ids of G' vertices in the input graph, ascending.
  std::vector<Vertex> to_parent;
  VertexSet z_prime;  // in G' ids
  std::optional<VertexSet> rejection_witness;  // in input ids
  std::vector<StageStats> stats;
  std::size_t input_vertices = 0;
  std::size_t core_size = 0;
  std::size_t verified_steps = 0;
  std::size_t verification_failures = 0;

  bool rejected() const { return verdict == Verdict::kRejected; }
  std::string verdict_string() const;
};

// Keeps Z, one lowest-id representative per class of r-projection profiles
// on Z, and closes the result under short paths; returns G[A'].
KernelResult build_kernel_from_core(const Graph& g, const VertexSet& z,
                                    Radius r);

KernelResult kernelize(const DominationInstance& inst,
                       const KernelOptions& options = {});

// Plain instance from an annotated one: fresh w and w' joined by a path of
// length r, and a path of length r from w to every vertex outside Z. Fresh
// vertices get ids n, n+1, ...: first w, then the w-w' path ending at w',
// then each connector path's inner vertices in ascending order of its
// endpoint.
Graph annotate_to_plain(const Graph& g_prime, const VertexSet& z, Radius r);

}  // namespace rdom

#endif  // RDOM_KERNEL_HPP_
