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

#include "rdom/bfs.hpp"

#include <algorithm>
#include <limits>

namespace rdom {

BoundedBfs::BoundedBfs(const Graph& g)
    : graph_(g),
      stamp_(g.num_vertices(), 0),
      dist_(g.num_vertices(), 0) {
  order_.reserve(g.num_vertices());
}

std::span<const Vertex> BoundedBfs::run(Vertex source, Radius r,
                                        const BfsFilter& filter) {
  return run(std::span<const Vertex>(&source, 1), r, filter);
}

std::span<const Vertex> BoundedBfs::run(std::span<const Vertex> sources,
                                        Radius r, const BfsFilter& filter) {
  if (generation_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 0;
  }
  ++generation_;
  order_.clear();

  const auto is_blocked = [&](Vertex v) {
    return !filter.blocked.empty() && filter.blocked[v] != 0;
  };
  const auto is_absorbing = [&](Vertex v) {
    return !filter.absorbing.empty() && filter.absorbing[v] != 0;
  };

  for (Vertex s : sources) {
    graph_.check_vertex(s);
    if (stamp_[s] == generation_) continue;
    stamp_[s] = generation_;
    dist_[s] = 0;
    order_.push_back(s);
  }
  const std::size_t num_sources = order_.size();

  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex u = order_[head];
    const std::uint32_t du = dist_[u];
    if (du >= r) break;  // order_ is sorted by distance
    if (head >= num_sources && is_absorbing(u)) continue;
    for (Vertex w : graph_.neighbors(u)) {
      if (stamp_[w] == generation_ || is_blocked(w)) continue;
      stamp_[w] = generation_;
      dist_[w] = du + 1;
      order_.push_back(w);
    }
  }
  return order_;
}

}  // namespace rdom
