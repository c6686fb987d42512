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

#ifndef RDOM_BFS_HPP_
#define RDOM_BFS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

// Restrictions applied by BoundedBfs. Masks are indexed by vertex id and may
// be empty (no restriction).
//   blocked:   never entered; models searching in G - S.
//   absorbing: entered and recorded but never expanded; models A-avoiding
//              paths. Sources are always expanded.
struct BfsFilter {
  std::span<const char> blocked;
  std::span<const char> absorbing;
};

// Reusable breadth-first search bounded by a radius. Scratch arrays are sized
// to the graph once and reset lazily with a generation stamp, so repeated
// searches on the same graph cost only the visited part.
class BoundedBfs {
 public:
  explicit BoundedBfs(const Graph& g);

  // Reached vertices in BFS order (nondecreasing distance).
  std::span<const Vertex> run(Vertex source, Radius r,
                              const BfsFilter& filter = {});
  std::span<const Vertex> run(std::span<const Vertex> sources, Radius r,
                              const BfsFilter& filter = {});

  // Queries about the most recent run.
  bool reached(Vertex v) const { return stamp_[v] == generation_; }
  std::uint32_t distance(Vertex v) const { return dist_[v]; }
  Dist dist(Vertex v) const {
    return reached(v) ? Dist::of(dist_[v]) : Dist::inf();
  }
  std::span<const Vertex> order() const { return order_; }

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> order_;
  std::uint32_t generation_ = 0;
};

}  // namespace rdom

#endif  // RDOM_BFS_HPP_
