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

#ifndef RDOM_DOMSET_HPP_
#define RDOM_DOMSET_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

// The annotated problem: r-dominate the vertices of z in graph with at most
// k vertices.
struct DominationInstance {
  Graph graph;
  VertexSet z;
  Radius r = 1;
  std::size_t k = 0;

  DominationInstance() = default;
  DominationInstance(Graph g, VertexSet dominatees, Radius radius,
                     std::size_t budget);

  // Z = V(G).
  static DominationInstance whole(Graph g, Radius radius, std::size_t budget);
};

struct DominatorResult {
  VertexSet dominators;
  bool optimal = false;
  // Members of z pairwise at distance > 2r; any dominator needs at least
  // this many vertices.
  std::optional<VertexSet> lower_bound_witness;
};

bool is_dominator(const DominationInstance& inst, const VertexSet& d);

struct OracleLimits {
  std::size_t max_vertices;
};

inline constexpr OracleLimits kExactOracleLimits{64};
inline constexpr OracleLimits kEnumerationLimits{20};

// Minimum (Z, r)-dominator by branch and bound. Throws CapExceeded above the
// vertex cap.
DominatorResult exact_min_dominator(const DominationInstance& inst,
                                    OracleLimits limits = kExactOracleLimits);

// Every minimum-size (Z, r)-dominator, in lexicographic order.
std::vector<VertexSet> enumerate_min_dominators(
    const DominationInstance& inst, OracleLimits limits = kEnumerationLimits);

// Maximal subset of z, pairwise at distance > 2r, built in ascending id order.
VertexSet greedy_scattered_lower_bound(const DominationInstance& inst);

// Classic greedy set cover over the balls N_r[v]: repeatedly take the vertex
// covering the most undominated members of z (lowest id on ties).
DominatorResult greedy_dominator(const DominationInstance& inst);

inline constexpr std::size_t kDefaultBgRounds = 2000;

// Iterative reweighting for hitting the range space {N_r[u] : u in z}. For a
// guess c (doubling from 1) each round takes the ranges whose weight is at
// least a 1/(2c) fraction of the total, covers them greedily, and returns the
// cover if it dominates all of z; otherwise the weights inside the ball of
// the lowest-id undominated vertex double. Falls back to greedy_dominator
// after max_rounds rounds.
DominatorResult bg_approx_dominator(const DominationInstance& inst,
                                    std::size_t max_rounds = kDefaultBgRounds);

}  // namespace rdom

#endif  // RDOM_DOMSET_HPP_
