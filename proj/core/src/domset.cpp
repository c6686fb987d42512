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

#include "rdom/domset.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "rdom/bfs.hpp"
#include "rdom/errors.hpp"

namespace rdom {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::vector<Vertex>> all_balls(const Graph& g, Radius r) {
  BoundedBfs bfs(g);
  std::vector<std::vector<Vertex>> balls(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto reached = bfs.run(v, r);
    balls[v].assign(reached.begin(), reached.end());
    std::sort(balls[v].begin(), balls[v].end());
  }
  return balls;
}

std::vector<Bits> ball_bits(const Graph& g, Radius r) {
  const std::size_t n = g.num_vertices();
  std::vector<Bits> out(n, Bits(n));
  auto balls = all_balls(g, r);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : balls[v]) out[v].set(w);
  }
  return out;
}

Bits to_bits(const VertexSet& s, std::size_t n) {
  Bits b(n);
  for (Vertex v : s) b.set(v);
  return b;
}

void check_cap(const DominationInstance& inst, OracleLimits limits,
               const char* what) {
  if (inst.graph.num_vertices() > limits.max_vertices) {
    throw CapExceeded(std::string(what) + " limited to " +
                      std::to_string(limits.max_vertices) +
                      " vertices, graph has " +
                      std::to_string(inst.graph.num_vertices()));
  }
}

// Size of a greedy packing of uncovered vertices with pairwise disjoint
// balls: each needs its own dominator.
std::size_t packing_bound(const std::vector<Bits>& balls, const Bits& uncovered) {
  Bits used(uncovered.size());
  std::size_t count = 0;
  for (auto z = uncovered.find_first(); z != Bits::npos;
       z = uncovered.find_next(z)) {
    if (!balls[z].intersects(used)) {
      used |= balls[z];
      ++count;
    }
  }
  return count;
}

class DominatorSearch {
 public:
  DominatorSearch(const std::vector<Bits>& balls, std::vector<Vertex> best)
      : balls_(balls), best_(std::move(best)) {}

  const std::vector<Vertex>& solve(const Bits& uncovered) {
    recurse(uncovered);
    return best_;
  }

 private:
  void recurse(const Bits& uncovered) {
    if (uncovered.none()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;
    if (chosen_.size() + packing_bound(balls_, uncovered) >= best_.size()) {
      return;
    }

    // Branch on the uncovered vertex with the fewest dominating options.
    std::size_t pivot = Bits::npos;
    std::size_t pivot_options = 0;
    for (auto z = uncovered.find_first(); z != Bits::npos;
         z = uncovered.find_next(z)) {
      const std::size_t options = balls_[z].count();
      if (pivot == Bits::npos || options < pivot_options) {
        pivot = z;
        pivot_options = options;
      }
    }

    std::vector<std::pair<std::size_t, Vertex>> options;
    for (auto v = balls_[pivot].find_first(); v != Bits::npos;
         v = balls_[pivot].find_next(v)) {
      options.emplace_back((balls_[v] & uncovered).count(),
                           static_cast<Vertex>(v));
    }
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, v] : options) {
      chosen_.push_back(v);
      recurse(uncovered - balls_[v]);
      chosen_.pop_back();
    }
  }

  const std::vector<Bits>& balls_;
  std::vector<Vertex> best_;
  std::vector<Vertex> chosen_;
};

// Enumerates all covers of size exactly `size` by branching on the lowest-id
// uncovered vertex. Every minimum dominator is reached along the branch that
// always picks its member covering that vertex.
class MinimumEnumerator {
 public:
  MinimumEnumerator(const std::vector<Bits>& balls, std::size_t size)
      : balls_(balls), size_(size) {}

  std::set<std::vector<Vertex>> run(const Bits& uncovered) {
    recurse(uncovered);
    return found_;
  }

 private:
  void recurse(const Bits& uncovered) {
    if (uncovered.none()) {
      if (chosen_.size() == size_) {
        std::vector<Vertex> s = chosen_;
        std::sort(s.begin(), s.end());
        found_.insert(std::move(s));
      }
      return;
    }
    if (chosen_.size() >= size_) return;
    const auto z = uncovered.find_first();
    for (auto v = balls_[z].find_first(); v != Bits::npos;
         v = balls_[z].find_next(v)) {
      chosen_.push_back(static_cast<Vertex>(v));
      recurse(uncovered - balls_[v]);
      chosen_.pop_back();
    }
  }

  const std::vector<Bits>& balls_;
  std::size_t size_;
  std::vector<Vertex> chosen_;
  std::set<std::vector<Vertex>> found_;
};

// Greedy cover of `ranges` (each a list of member vertices). Ties on gain go
// to the heavier vertex, then the lower id.
std::vector<Vertex> greedy_hitting_set(
    std::size_t n, const std::vector<const std::vector<Vertex>*>& ranges,
    const std::vector<double>* weights) {
  std::vector<std::vector<std::size_t>> ranges_of(n);
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (Vertex v : *ranges[i]) ranges_of[v].push_back(i);
  }
  std::vector<std::size_t> gain(n);
  for (Vertex v = 0; v < n; ++v) gain[v] = ranges_of[v].size();
  std::vector<char> hit(ranges.size(), 0);
  std::size_t remaining = ranges.size();
  std::vector<Vertex> chosen;

  while (remaining > 0) {
    Vertex pick = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (gain[v] > gain[pick] ||
          (gain[v] == gain[pick] && weights &&
           (*weights)[v] > (*weights)[pick])) {
        pick = v;
      }
    }
    chosen.push_back(pick);
    for (std::size_t i : ranges_of[pick]) {
      if (hit[i]) continue;
      hit[i] = 1;
      --remaining;
      for (Vertex v : *ranges[i]) --gain[v];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

DominatorResult finish(const DominationInstance& inst,
                       std::vector<Vertex> dominators) {
  DominatorResult result;
  result.dominators = VertexSet(std::move(dominators));
  result.lower_bound_witness = greedy_scattered_lower_bound(inst);
  result.optimal =
      result.dominators.size() == result.lower_bound_witness->size();
  return result;
}

}  // namespace

DominationInstance::DominationInstance(Graph g, VertexSet dominatees,
                                       Radius radius, std::size_t budget)
    : graph(std::move(g)), z(std::move(dominatees)), r(radius), k(budget) {
  graph.check_vertices(z);
  if (r < 1) throw ContractViolation("domination radius must be >= 1");
}

DominationInstance DominationInstance::whole(Graph g, Radius radius,
                                             std::size_t budget) {
  VertexSet all = VertexSet::range(g.num_vertices());
  return DominationInstance(std::move(g), std::move(all), radius, budget);
}

bool is_dominator(const DominationInstance& inst, const VertexSet& d) {
  inst.graph.check_vertices(d);
  if (inst.z.empty()) return true;
  if (d.empty()) return false;
  BoundedBfs bfs(inst.graph);
  bfs.run(d.members(), inst.r);
  return std::all_of(inst.z.begin(), inst.z.end(),
                     [&](Vertex v) { return bfs.reached(v); });
}

VertexSet greedy_scattered_lower_bound(const DominationInstance& inst) {
  const std::size_t n = inst.graph.num_vertices();
  std::vector<char> excluded(n, 0);
  std::vector<Vertex> chosen;
  BoundedBfs bfs(inst.graph);
  for (Vertex z : inst.z) {
    if (excluded[z]) continue;
    chosen.push_back(z);
    for (Vertex v : bfs.run(z, 2 * inst.r)) excluded[v] = 1;
  }
  return VertexSet::from_sorted(std::move(chosen));
}

DominatorResult greedy_dominator(const DominationInstance& inst) {
  const std::size_t n = inst.graph.num_vertices();
  if (inst.z.empty()) return finish(inst, {});
  auto balls = all_balls(inst.graph, inst.r);
  std::vector<const std::vector<Vertex>*> ranges;
  for (Vertex z : inst.z) ranges.push_back(&balls[z]);
  return finish(inst, greedy_hitting_set(n, ranges, nullptr));
}

DominatorResult exact_min_dominator(const DominationInstance& inst,
                                    OracleLimits limits) {
  check_cap(inst, limits, "exact_min_dominator");
  const std::size_t n = inst.graph.num_vertices();
  if (inst.z.empty()) {
    DominatorResult result = finish(inst, {});
    result.optimal = true;
    return result;
  }
  const auto balls = ball_bits(inst.graph, inst.r);
  auto greedy = greedy_dominator(inst);
  DominatorSearch search(balls, greedy.dominators.members());
  DominatorResult result = finish(inst, search.solve(to_bits(inst.z, n)));
  result.optimal = true;
  return result;
}

std::vector<VertexSet> enumerate_min_dominators(const DominationInstance& inst,
                                                OracleLimits limits) {
  check_cap(inst, limits, "enumerate_min_dominators");
  if (inst.z.empty()) return {VertexSet{}};
  const std::size_t n = inst.graph.num_vertices();
  const std::size_t opt =
      exact_min_dominator(inst, OracleLimits{n}).dominators.size();
  const auto balls = ball_bits(inst.graph, inst.r);
  MinimumEnumerator enumerator(balls, opt);
  std::vector<VertexSet> out;
  for (auto& s : enumerator.run(to_bits(inst.z, n))) {
    out.push_back(VertexSet::from_sorted(s));
  }
  return out;
}

DominatorResult bg_approx_dominator(const DominationInstance& inst,
                                    std::size_t max_rounds) {
  const std::size_t n = inst.graph.num_vertices();
  if (inst.z.empty()) return finish(inst, {});

  const auto balls = all_balls(inst.graph, inst.r);
  std::vector<double> weight(n);
  std::size_t rounds = 0;

  for (std::size_t guess = 1;; guess *= 2) {
    std::fill(weight.begin(), weight.end(), 1.0);
    const double log_term =
        std::max(1.0, std::ceil(std::log2(2.0 * static_cast<double>(n) /
                                          static_cast<double>(guess))));
    const std::size_t budget =
        4 * guess * static_cast<std::size_t>(log_term) + 1;

    for (std::size_t it = 0; it < budget; ++it) {
      if (rounds++ >= max_rounds) return greedy_dominator(inst);

      double total = 0;
      for (double w : weight) total += w;
      const double threshold = total / (2.0 * static_cast<double>(guess));

      std::vector<const std::vector<Vertex>*> heavy;
      for (Vertex z : inst.z) {
        double mass = 0;
        for (Vertex v : balls[z]) mass += weight[v];
        if (mass >= threshold) heavy.push_back(&balls[z]);
      }
      auto net = greedy_hitting_set(n, heavy, &weight);
      VertexSet net_set(net);
      if (is_dominator(inst, net_set)) return finish(inst, std::move(net));

      // Double the weight of the ball around the lowest-id undominated vertex.
      BoundedBfs bfs(inst.graph);
      bfs.run(net_set.members(), inst.r);
      for (Vertex z : inst.z) {
        if (bfs.reached(z)) continue;
        for (Vertex v : balls[z]) weight[v] *= 2.0;
        break;
      }
      if (total > 1e200) {
        for (double& w : weight) w *= 1e-200;
      }
    }
    // Past n/2 the first round of a guess already covers every range.
    if (guess > n) return greedy_dominator(inst);
  }
}

}  // namespace rdom
