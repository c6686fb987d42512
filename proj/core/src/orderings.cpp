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

#include "rdom/orderings.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "rdom/bfs.hpp"
#include "rdom/errors.hpp"

namespace rdom {

Ordering Ordering::from_sequence(std::vector<Vertex> sequence) {
  Ordering o;
  o.position_.assign(sequence.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Vertex v = sequence[i];
    if (v >= sequence.size() ||
        o.position_[v] != std::numeric_limits<std::size_t>::max()) {
      throw ContractViolation("ordering is not a permutation of [0," +
                              std::to_string(sequence.size()) + ")");
    }
    o.position_[v] = i;
  }
  o.sequence_ = std::move(sequence);
  return o;
}

Ordering Ordering::identity(std::size_t n) {
  return from_sequence(VertexSet::range(n).members());
}

namespace {

void check_order(const Graph& g, const Ordering& order) {
  if (order.size() != g.num_vertices()) {
    throw ContractViolation("ordering has " + std::to_string(order.size()) +
                            " vertices, graph has " +
                            std::to_string(g.num_vertices()));
  }
}

// Depth-layered search from v over states (vertex, minimum rank on the walk
// so far). A state is dropped when the same vertex was already reached at no
// greater depth with a minimum at least as large: every continuation of the
// dropped state is also available to the kept one.
class WReachSearch {
 public:
  explicit WReachSearch(const Graph& g)
      : g_(g), best_(g.num_vertices(), kUnset),
        in_next_(g.num_vertices(), 0) {}

  std::vector<Vertex> run(const Ordering& order, Vertex v, Radius r) {
    touched_.clear();
    std::vector<Vertex> found{v};
    const std::size_t pv = order.position(v);
    set_best(v, pv);
    frontier_.assign(1, {v, pv});

    for (Radius depth = 1; depth <= r && !frontier_.empty(); ++depth) {
      next_.clear();
      for (const auto& [x, m] : frontier_) {
        for (Vertex y : g_.neighbors(x)) {
          const std::size_t my = std::min(m, order.position(y));
          if (best_[y] != kUnset && best_[y] >= my) continue;
          set_best(y, my);
          if (my == order.position(y)) found.push_back(y);
          if (!in_next_[y]) {
            in_next_[y] = 1;
            next_.push_back({y, my});
          }
        }
      }
      // A vertex may have been improved after it was queued.
      for (auto& [y, m] : next_) {
        m = best_[y];
        in_next_[y] = 0;
      }
      std::swap(frontier_, next_);
    }
    for (Vertex t : touched_) best_[t] = kUnset;
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
  }

 private:
  static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

  void set_best(Vertex y, std::size_t m) {
    if (best_[y] == kUnset) touched_.push_back(y);
    best_[y] = m;
  }

  const Graph& g_;
  std::vector<std::size_t> best_;
  std::vector<char> in_next_;
  std::vector<Vertex> touched_;
  std::vector<std::pair<Vertex, std::size_t>> frontier_;
  std::vector<std::pair<Vertex, std::size_t>> next_;
};

// Exact wcol by placing vertices front to back. Once the vertex set P before
// u is fixed, u enters WReach[v] exactly for the v within distance r of u in
// G - P, so counts only grow and a branch dies as soon as one reaches the
// incumbent.
class WcolBranchAndBound {
 public:
  WcolBranchAndBound(const Graph& g, Radius r)
      : g_(g), r_(r), bfs_(g), placed_(g.num_vertices(), 0),
        count_(g.num_vertices(), 0) {}

  WcolExact solve() {
    const std::size_t n = g_.num_vertices();
    best_ = n + 1;
    prefix_.clear();
    if (n == 0) return {0, Ordering::identity(0)};
    recurse(0);
    return {best_, Ordering::from_sequence(best_sequence_)};
  }

 private:
  void recurse(std::size_t current_max) {
    const std::size_t n = g_.num_vertices();
    if (prefix_.size() == n) {
      if (current_max < best_) {
        best_ = current_max;
        best_sequence_ = prefix_;
      }
      return;
    }
    for (Vertex u = 0; u < n; ++u) {
      if (placed_[u]) continue;
      auto reached = bfs_.run(u, r_, BfsFilter{placed_, {}});
      std::vector<Vertex> hit(reached.begin(), reached.end());
      std::size_t new_max = current_max;
      for (Vertex v : hit) new_max = std::max(new_max, ++count_[v]);
      if (new_max < best_) {
        placed_[u] = 1;
        prefix_.push_back(u);
        recurse(new_max);
        prefix_.pop_back();
        placed_[u] = 0;
      }
      for (Vertex v : hit) --count_[v];
    }
  }

  const Graph& g_;
  Radius r_;
  BoundedBfs bfs_;
  std::vector<char> placed_;
  std::vector<std::size_t> count_;
  std::vector<Vertex> prefix_;
  std::vector<Vertex> best_sequence_;
  std::size_t best_ = 0;
};

}  // namespace

VertexSet wreach(const Graph& g, const Ordering& order, Vertex v, Radius r) {
  check_order(g, order);
  g.check_vertex(v);
  WReachSearch search(g);
  return VertexSet::from_sorted(search.run(order, v, r));
}

std::vector<VertexSet> wreach_all(const Graph& g, const Ordering& order,
                                  Radius r) {
  check_order(g, order);
  WReachSearch search(g);
  std::vector<VertexSet> out;
  out.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.push_back(VertexSet::from_sorted(search.run(order, v, r)));
  }
  return out;
}

SetFamily wreach_family(const Graph& g, const Ordering& order, Radius r) {
  return SetFamily(g.num_vertices(), wreach_all(g, order, r));
}

std::size_t wcol_of_order(const Graph& g, const Ordering& order, Radius r) {
  check_order(g, order);
  WReachSearch search(g);
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    best = std::max(best, search.run(order, v, r).size());
  }
  return best;
}

WcolExact wcol_exact(const Graph& g, Radius r, std::size_t max_vertices) {
  if (g.num_vertices() > max_vertices) {
    throw CapExceeded("wcol_exact limited to " + std::to_string(max_vertices) +
                      " vertices, graph has " +
                      std::to_string(g.num_vertices()));
  }
  return WcolBranchAndBound(g, r).solve();
}

Ordering degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> removal;
  removal.reserve(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = 1;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return Ordering::from_sequence(std::move(removal));
}

}  // namespace rdom
