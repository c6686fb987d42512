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

#ifndef RDOM_SPARSITY_HPP_
#define RDOM_SPARSITY_HPP_

#include <cstddef>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

// Outcome of a quasi-wideness extraction. On success |scattered| >= m and
// |separator| <= s_max; on failure the pair maximizing |B| - |S| over all
// rounds (earliest on ties) is kept. In both cases scattered ∩ separator = ∅
// and scattered is r-independent in G - separator.
struct QwResult {
  VertexSet separator;
  VertexSet scattered;
  std::size_t rounds = 0;
  bool success = false;
};

// Greedy separator search: each round takes a maximal r-scattered subset of
// A \ S in G - S (ascending ids, ball exclusion); if it is smaller than m,
// the vertex of G - S with the most A \ S members within ceil(r/2) joins S.
QwResult quasi_wide_extract(const Graph& g, const VertexSet& a, Radius r,
                            std::size_t m, std::size_t s_max);

inline std::size_t default_separator_cap(Radius r) { return 10 * r; }

struct ClosureResult {
  VertexSet closure;
  std::size_t threshold = 0;
  std::vector<Vertex> added;  // in insertion order
};

// Grows Y from X: while some u outside Y has |M_r(u, Y)| >= t, the one with
// the largest projection (lowest id on ties) joins Y. Afterwards every u
// outside Y has |M_r(u, Y)| < t.
ClosureResult r_closure(const Graph& g, const VertexSet& x, Radius r,
                        std::size_t t);

// max(4, 4 * ceil(m / n) + 2): tracks the edge density of g.
std::size_t default_closure_threshold(const Graph& g);

// Adds, for every pair u < v of X with dist(u, v) <= r, the vertices of
// shortest_path(u, v). Distances up to r between members of X are then the
// same in G[X'] as in G.
VertexSet short_paths_closure(const Graph& g, const VertexSet& x, Radius r);

}  // namespace rdom

#endif  // RDOM_SPARSITY_HPP_
