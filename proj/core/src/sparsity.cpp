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

#include "rdom/sparsity.hpp"

#include <algorithm>
#include <string>

#include "rdom/bfs.hpp"
#include "rdom/errors.hpp"

namespace rdom {

namespace {

// Maximal subset of candidates, pairwise at distance > r in G - S, built in
// ascending id order.
std::vector<Vertex> greedy_scattered(BoundedBfs& bfs,
                                     const VertexSet& candidates, Radius r,
                                     std::span<const char> blocked) {
  const std::size_t n = bfs.graph().num_vertices();
  std::vector<char> excluded(n, 0);
  std::vector<Vertex> chosen;
  for (Vertex a : candidates) {
    if (excluded[a]) continue;
    chosen.push_back(a);
    for (Vertex v : bfs.run(a, r, BfsFilter{blocked, {}})) excluded[v] = 1;
  }
  return chosen;
}

}  // namespace

QwResult quasi_wide_extract(const Graph& g, const VertexSet& a, Radius r,
                            std::size_t m, std::size_t s_max) {
  g.check_vertices(a);
  if (m == 0) throw ContractViolation("quasi_wide_extract needs m >= 1");
  const std::size_t n = g.num_vertices();
  const Radius hub_radius = (r + 1) / 2;

  BoundedBfs bfs(g);
  std::vector<char> in_s(n, 0);
  std::vector<Vertex> separator;

  QwResult best;
  bool have_best = false;
  long best_margin = 0;

  for (std::size_t round = 1;; ++round) {
    const VertexSet separator_set(separator);
    const VertexSet remaining = set_difference(a, separator_set);
    auto scattered = greedy_scattered(bfs, remaining, r, in_s);

    const long margin = static_cast<long>(scattered.size()) -
                        static_cast<long>(separator.size());
    if (scattered.size() >= m) {
      return {separator_set, VertexSet::from_sorted(std::move(scattered)),
              round, true};
    }
    if (!have_best || margin > best_margin) {
      have_best = true;
      best_margin = margin;
      best = {separator_set, VertexSet::from_sorted(std::move(scattered)),
              round, false};
    }
    if (separator.size() >= s_max) break;

    // Hub score: members of A \ S within ceil(r/2) in G - S.
    std::vector<std::size_t> score(n, 0);
    for (Vertex x : remaining) {
      for (Vertex v : bfs.run(x, hub_radius, BfsFilter{in_s, {}})) ++score[v];
    }
    Vertex hub = 0;
    std::size_t hub_score = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_s[v] && score[v] > hub_score) {
        hub = v;
        hub_score = score[v];
      }
    }
    if (hub_score == 0) break;
    in_s[hub] = 1;
    separator.push_back(hub);
  }
  best.rounds = separator.size() + 1;
  return best;
}

std::size_t default_closure_threshold(const Graph& g) {
  const std::size_t n = std::max<std::size_t>(g.num_vertices(), 1);
  const std::size_t density = (g.num_edges() + n - 1) / n;
  return std::max<std::size_t>(4, 2 * density * 2 + 2);
}

ClosureResult r_closure(const Graph& g, const VertexSet& x, Radius r,
                        std::size_t t) {
  g.check_vertices(x);
  if (t < 2) throw ContractViolation("closure threshold must be >= 2");
  const std::size_t n = g.num_vertices();

  ClosureResult result;
  result.threshold = t;
  std::vector<char> in_y = x.mask(n);
  std::vector<Vertex> y(x.begin(), x.end());
  BoundedBfs bfs(g);
  std::vector<std::size_t> proj(n);

  for (;;) {
    // |M_r(u, Y)| for all u outside Y: search from each member of Y through
    // vertices outside Y only.
    std::fill(proj.begin(), proj.end(), 0);
    for (Vertex src : y) {
      for (Vertex u : bfs.run(src, r, BfsFilter{in_y, {}})) {
        if (u != src) ++proj[u];
      }
    }
    Vertex pick = 0;
    std::size_t pick_size = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!in_y[u] && proj[u] > pick_size) {
        pick = u;
        pick_size = proj[u];
      }
    }
    if (pick_size < t) break;
    in_y[pick] = 1;
    y.push_back(pick);
    result.added.push_back(pick);
  }
  result.closure = VertexSet(std::move(y));
  return result;
}

VertexSet short_paths_closure(const Graph& g, const VertexSet& x, Radius r) {
  g.check_vertices(x);
  const std::size_t n = g.num_vertices();
  std::vector<char> in_out = x.mask(n);
  BoundedBfs bfs(g);

  for (Vertex u : x) {
    bfs.run(u, r);
    for (Vertex v : x) {
      if (v <= u || !bfs.reached(v)) continue;
      // Same walk-back rule as shortest_path: lowest-id predecessor.
      Vertex cur = v;
      while (cur != u) {
        const std::uint32_t want = bfs.distance(cur) - 1;
        for (Vertex w : g.neighbors(cur)) {
          if (bfs.reached(w) && bfs.distance(w) == want) {
            cur = w;
            break;
          }
        }
        in_out[cur] = 1;
      }
    }
  }
  return VertexSet::from_mask(in_out);
}

}  // namespace rdom
