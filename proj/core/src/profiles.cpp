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

#include "rdom/profiles.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include "rdom/bfs.hpp"
#include "rdom/errors.hpp"

namespace rdom {

namespace {

std::size_t mix(std::size_t seed, std::uint64_t value) {
  // boost::hash_combine constant, widened.
  return seed ^ (static_cast<std::size_t>(value) + 0x9e3779b97f4a7c15ull +
                 (seed << 6) + (seed >> 2));
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::size_t h = key.size();
    for (auto x : key) h = mix(h, x);
    return h;
  }
};

// Distinct keys with a hard cap on memory.
class ClassCounter {
 public:
  explicit ClassCounter(const CounterLimits& limits) : limits_(limits) {}

  void add(std::vector<std::uint64_t> key) {
    classes_.insert(std::move(key));
    if (classes_.size() > limits_.max_classes) {
      throw CapExceeded("distinct class count exceeded cap of " +
                        std::to_string(limits_.max_classes));
    }
  }
  std::size_t count() const { return classes_.size(); }

 private:
  CounterLimits limits_;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> classes_;
};

std::uint64_t pack(Vertex a, std::uint32_t d) {
  return (static_cast<std::uint64_t>(a) << 32) | d;
}

// For every vertex v, the list of (a, dist) for a in A reachable within r.
// With avoid_a set, searches refuse to pass through other members of A, which
// yields A-avoiding lengths for vertices outside A.
std::vector<std::vector<std::uint64_t>> per_vertex_keys(const Graph& g,
                                                        const VertexSet& a,
                                                        Radius r,
                                                        bool with_distance,
                                                        bool avoid_a) {
  g.check_vertices(a);
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::uint64_t>> keys(n);
  std::vector<char> a_mask;
  BfsFilter filter;
  if (avoid_a) {
    a_mask = a.mask(n);
    filter.blocked = a_mask;
  }
  BoundedBfs bfs(g);
  for (Vertex src : a) {
    for (Vertex v : bfs.run(src, r, filter)) {
      keys[v].push_back(with_distance ? pack(src, bfs.distance(v))
                                      : static_cast<std::uint64_t>(src));
    }
  }
  return keys;
}

std::size_t count_classes(const Graph& g, const VertexSet& a, Radius r,
                          bool with_distance, bool outside_a_only,
                          const CounterLimits& limits) {
  auto keys = per_vertex_keys(g, a, r, with_distance, outside_a_only);
  ClassCounter counter(limits);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (outside_a_only && a.contains(v)) continue;
    counter.add(std::move(keys[v]));
  }
  return counter.count();
}

}  // namespace

// ---------------------------------------------------------------------------
// BasicProfile

template <typename Tag>
BasicProfile<Tag>::BasicProfile(Radius r, std::vector<Entry> entries)
    : radius_(r), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second > r) {
      throw ContractViolation("profile value " +
                              std::to_string(entries_[i].second) +
                              " exceeds radius " + std::to_string(r));
    }
    if (i > 0 && entries_[i].first == entries_[i - 1].first) {
      throw ContractViolation("duplicate profile key " +
                              std::to_string(entries_[i].first));
    }
  }
}

template <typename Tag>
Dist BasicProfile<Tag>::at(Vertex a) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), a,
      [](const Entry& e, Vertex key) { return e.first < key; });
  if (it == entries_.end() || it->first != a) return Dist::inf();
  return Dist::of(it->second);
}

template <typename Tag>
VertexSet BasicProfile<Tag>::keys() const {
  std::vector<Vertex> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return VertexSet::from_sorted(std::move(out));
}

template <typename Tag>
std::size_t BasicProfile<Tag>::hash() const {
  std::size_t h = mix(entries_.size(), radius_);
  for (const auto& [a, d] : entries_) h = mix(h, pack(a, d));
  return h;
}

template <typename Tag>
std::string to_string(const BasicProfile<Tag>& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < p.entries().size(); ++i) {
    if (i) os << ',';
    os << p.entries()[i].first << ':' << p.entries()[i].second;
  }
  os << '}';
  return os.str();
}

template class BasicProfile<DistanceProfileTag>;
template class BasicProfile<ProjectionProfileTag>;
template std::string to_string(const DistanceProfile&);
template std::string to_string(const ProjectionProfile&);

// ---------------------------------------------------------------------------
// Families

SetFamily::SetFamily(std::size_t ground_size, std::vector<VertexSet> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (!m.empty() && m.back() >= ground_size_) {
      throw IndexError("family member outside ground set of size " +
                       std::to_string(ground_size_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

SetFamily neighborhood_family(const Graph& g, Radius r) {
  return neighborhood_family(g, VertexSet::range(g.num_vertices()), r);
}

SetFamily neighborhood_family(const Graph& g, const VertexSet& a, Radius r) {
  auto keys = per_vertex_keys(g, a, r, /*with_distance=*/false,
                              /*avoid_a=*/false);
  std::vector<VertexSet> members;
  members.reserve(keys.size());
  for (auto& key : keys) {
    std::vector<Vertex> m(key.begin(), key.end());
    members.push_back(VertexSet::from_sorted(std::move(m)));
  }
  return SetFamily(g.num_vertices(), std::move(members));
}

// ---------------------------------------------------------------------------
// Single-vertex profiles

DistanceProfile distance_profile(const Graph& g, Vertex u, const VertexSet& a,
                                 Radius r) {
  g.check_vertices(a);
  BoundedBfs bfs(g);
  std::vector<DistanceProfile::Entry> entries;
  for (Vertex v : bfs.run(u, r)) {
    if (a.contains(v)) entries.emplace_back(v, bfs.distance(v));
  }
  return DistanceProfile(r, std::move(entries));
}

ProjectionProfile projection_profile(const Graph& g, Vertex u,
                                     const VertexSet& a, Radius r) {
  g.check_vertex(u);
  g.check_vertices(a);
  if (a.contains(u)) {
    throw ContractViolation("projection source " + std::to_string(u) +
                            " belongs to the target set");
  }
  const auto a_mask = a.mask(g.num_vertices());
  BoundedBfs bfs(g);
  std::vector<ProjectionProfile::Entry> entries;
  for (Vertex v : bfs.run(u, r, BfsFilter{{}, a_mask})) {
    if (a_mask[v]) entries.emplace_back(v, bfs.distance(v));
  }
  return ProjectionProfile(r, std::move(entries));
}

VertexSet projection(const Graph& g, Vertex u, const VertexSet& a, Radius r) {
  return projection_profile(g, u, a, r).keys();
}

std::vector<ProjectionProfile> all_projection_profiles(const Graph& g,
                                                       const VertexSet& a,
                                                       Radius r) {
  auto keys = per_vertex_keys(g, a, r, /*with_distance=*/true,
                              /*avoid_a=*/true);
  std::vector<ProjectionProfile> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (a.contains(v)) continue;
    std::vector<ProjectionProfile::Entry> entries;
    entries.reserve(keys[v].size());
    for (auto k : keys[v]) {
      entries.emplace_back(static_cast<Vertex>(k >> 32),
                           static_cast<std::uint32_t>(k & 0xffffffffu));
    }
    out[v] = ProjectionProfile(r, std::move(entries));
  }
  return out;
}

DistanceProfile profile_from_ball_tuple(const std::vector<VertexSet>& tuple) {
  if (tuple.empty()) {
    throw ContractViolation("ball tuple must hold at least N_0[u] ∩ A");
  }
  const Radius r = static_cast<Radius>(tuple.size() - 1);
  std::vector<DistanceProfile::Entry> entries;
  for (Vertex a : tuple.back()) {
    for (Radius i = 0; i <= r; ++i) {
      if (tuple[i].contains(a)) {
        entries.emplace_back(a, i);
        break;
      }
    }
  }
  return DistanceProfile(r, std::move(entries));
}

// ---------------------------------------------------------------------------
// Counters

std::size_t nu_r(const Graph& g, const VertexSet& a, Radius r,
                 const CounterLimits& limits) {
  return count_classes(g, a, r, false, false, limits);
}

std::size_t nu_hat_r(const Graph& g, const VertexSet& a, Radius r,
                     const CounterLimits& limits) {
  return count_classes(g, a, r, true, false, limits);
}

std::size_t mu_r(const Graph& g, const VertexSet& a, Radius r,
                 const CounterLimits& limits) {
  return count_classes(g, a, r, false, true, limits);
}

std::size_t mu_hat_r(const Graph& g, const VertexSet& a, Radius r,
                     const CounterLimits& limits) {
  return count_classes(g, a, r, true, true, limits);
}

// ---------------------------------------------------------------------------
// Layered graph

LayeredGraph layered_graph(const Graph& g, const VertexSet& a, Radius r) {
  g.check_vertices(a);
  const std::size_t n = g.num_vertices();
  LayeredGraph h;
  h.base_vertices = n;
  h.radius = r;

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    for (std::uint32_t i = 1; i <= r; ++i) {
      if (!a.contains(u)) edges.emplace_back(h.copy(u, i - 1), h.copy(v, i));
      if (!a.contains(v)) edges.emplace_back(h.copy(v, i - 1), h.copy(u, i));
    }
  }
  h.graph = Graph::from_edges(n * (static_cast<std::size_t>(r) + 1), edges);

  std::vector<Vertex> targets;
  for (std::uint32_t i = 0; i <= r; ++i) {
    for (Vertex x : a) targets.push_back(h.copy(x, i));
  }
  h.targets = VertexSet(std::move(targets));
  return h;
}

ProjectionProfile decode_projection_via_layers(const Graph& g,
                                               const VertexSet& a, Radius r,
                                               Vertex u) {
  g.check_vertex(u);
  if (a.contains(u)) {
    throw ContractViolation("projection source " + std::to_string(u) +
                            " belongs to the target set");
  }
  const LayeredGraph h = layered_graph(g, a, r);
  BoundedBfs bfs(h.graph);
  bfs.run(h.copy(u, 0), r);

  std::vector<ProjectionProfile::Entry> entries;
  for (Vertex v : a) {
    for (std::uint32_t i = 0; i <= r; ++i) {
      const Vertex copy = h.copy(v, i);
      if (bfs.reached(copy) && bfs.distance(copy) == i) {
        entries.emplace_back(v, i);
        break;
      }
    }
  }
  return ProjectionProfile(r, std::move(entries));
}

// ---------------------------------------------------------------------------
// VC-dimension

std::string VcDimension::to_string() const {
  return exceeds_cap ? ">=" + std::to_string(value) : std::to_string(value);
}

VcDimension vc_dimension(const SetFamily& family, std::size_t cap) {
  if (cap > kMaxVcCap) {
    throw std::invalid_argument("vc_dimension cap " + std::to_string(cap) +
                                " exceeds " + std::to_string(kMaxVcCap));
  }
  // The empty family shatters nothing; report 0 by convention.
  if (family.size() == 0) return {0, false};

  const std::size_t ground = family.ground_size();
  std::vector<boost::dynamic_bitset<>> rows;
  rows.reserve(family.size());
  for (const auto& m : family.members()) {
    boost::dynamic_bitset<> row(ground);
    for (Vertex v : m) row.set(v);
    rows.push_back(std::move(row));
  }

  std::vector<char> seen;
  const auto shattered = [&](const std::vector<Vertex>& x) {
    const std::size_t patterns = std::size_t{1} << x.size();
    if (rows.size() < patterns) return false;
    seen.assign(patterns, 0);
    std::size_t distinct = 0;
    for (const auto& row : rows) {
      std::size_t trace = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (row.test(x[i])) trace |= std::size_t{1} << i;
      }
      if (!seen[trace]) {
        seen[trace] = 1;
        if (++distinct == patterns) return true;
      }
    }
    return false;
  };

  std::vector<std::vector<Vertex>> level;
  for (Vertex v = 0; v < ground; ++v) {
    if (shattered({v})) level.push_back({v});
  }
  std::size_t best = 0;
  while (!level.empty()) {
    best = level.front().size();
    if (best > cap) return {cap + 1, true};

    std::set<std::vector<Vertex>> known(level.begin(), level.end());
    std::vector<std::vector<Vertex>> next;
    // Join sets sharing all but their last element; level is sorted.
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        if (!std::equal(level[i].begin(), level[i].end() - 1,
                        level[j].begin())) {
          break;
        }
        std::vector<Vertex> cand = level[i];
        cand.push_back(level[j].back());
        bool all_subsets = true;
        for (std::size_t drop = 0; drop + 2 < cand.size() && all_subsets;
             ++drop) {
          std::vector<Vertex> sub;
          for (std::size_t t = 0; t < cand.size(); ++t) {
            if (t != drop) sub.push_back(cand[t]);
          }
          all_subsets = known.count(sub) > 0;
        }
        if (all_subsets && shattered(cand)) next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  return {best, false};
}

std::uint64_t sauer_shelah_bound(std::uint64_t n, std::uint64_t d) {
  __extension__ using u128 = unsigned __int128;
  const u128 limit = std::numeric_limits<std::uint64_t>::max();
  u128 total = 1;
  u128 binom = 1;
  for (std::uint64_t i = 1; i <= std::min(n, d); ++i) {
    // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at each step.
    binom = binom * (n - i + 1) / i;
    total += binom;
    if (binom > limit || total > limit) {
      throw std::overflow_error("Sauer-Shelah bound exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace rdom
