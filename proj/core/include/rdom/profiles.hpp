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

#ifndef RDOM_PROFILES_HPP_
#define RDOM_PROFILES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

// A finite map from a target set A to {0..r}; absent keys mean INF. The entry
// list is kept sorted by vertex, which makes equality and hashing canonical.
template <typename Tag>
class BasicProfile {
 public:
  using Entry = std::pair<Vertex, std::uint32_t>;

  BasicProfile() = default;
  BasicProfile(Radius r, std::vector<Entry> entries);

  Radius radius() const { return radius_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Dist at(Vertex a) const;
  VertexSet keys() const;
  std::size_t hash() const;

  friend bool operator==(const BasicProfile&, const BasicProfile&) = default;

 private:
  Radius radius_ = 0;
  std::vector<Entry> entries_;
};

struct DistanceProfileTag {};
struct ProjectionProfileTag {};

// pi_r[u, A]: a -> dist(u, a) when at most r.
using DistanceProfile = BasicProfile<DistanceProfileTag>;
// rho_r[u, A]: a -> length of a shortest A-avoiding u-a path when at most r.
using ProjectionProfile = BasicProfile<ProjectionProfileTag>;

template <typename Tag>
std::string to_string(const BasicProfile<Tag>& p);

// A deduplicated family of subsets of {0..ground_size-1} in canonical
// (lexicographic) order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t ground_size, std::vector<VertexSet> members);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<VertexSet>& members() const { return members_; }

 private:
  std::size_t ground_size_ = 0;
  std::vector<VertexSet> members_;
};

// {N_r[v] ∩ A : v in V(G)}; with A = V(G) this is the closed neighborhood
// family of G_{<=r}.
SetFamily neighborhood_family(const Graph& g, Radius r);
SetFamily neighborhood_family(const Graph& g, const VertexSet& a, Radius r);

DistanceProfile distance_profile(const Graph& g, Vertex u, const VertexSet& a,
                                 Radius r);

// M_r(u, A). Throws ContractViolation when u is in A.
VertexSet projection(const Graph& g, Vertex u, const VertexSet& a, Radius r);
ProjectionProfile projection_profile(const Graph& g, Vertex u,
                                     const VertexSet& a, Radius r);

// Rebuilds pi_r[u, A] from the tuple (N_0[u] ∩ A, ..., N_r[u] ∩ A): each a
// maps to the first index whose set contains it.
DistanceProfile profile_from_ball_tuple(const std::vector<VertexSet>& tuple);

struct CounterLimits {
  // Maximum number of distinct classes held in memory before CapExceeded.
  std::size_t max_classes = std::size_t{1} << 22;
};

// Distinct-class counters. The nu variants range over all of V(G), the mu
// variants over V(G) \ A.
std::size_t nu_r(const Graph& g, const VertexSet& a, Radius r,
                 const CounterLimits& limits = {});
std::size_t nu_hat_r(const Graph& g, const VertexSet& a, Radius r,
                     const CounterLimits& limits = {});
std::size_t mu_r(const Graph& g, const VertexSet& a, Radius r,
                 const CounterLimits& limits = {});
std::size_t mu_hat_r(const Graph& g, const VertexSet& a, Radius r,
                     const CounterLimits& limits = {});

// All projection profiles rho_r[u, A] for u outside A, computed from the A
// side: one search per a in A that refuses to enter other members of A.
// Entry u of the result is empty for u in A.
std::vector<ProjectionProfile> all_projection_profiles(const Graph& g,
                                                       const VertexSet& a,
                                                       Radius r);

// The layered graph H over V(G) x {0..r}: vertex (u, i) has id i*n + u, and
// for every edge uv and 1 <= i <= r there is an edge (u,i-1)(v,i) whenever u
// is not in A (and symmetrically for v).
struct LayeredGraph {
  Graph graph;
  VertexSet targets;  // B = A x {0..r}
  std::size_t base_vertices = 0;
  Radius radius = 0;

  Vertex copy(Vertex u, std::uint32_t layer) const {
    return static_cast<Vertex>(layer * base_vertices + u);
  }
};

LayeredGraph layered_graph(const Graph& g, const VertexSet& a, Radius r);

// rho_r[u, A](v) = least i with pi^H_r[(u,0), B]((v,i)) = i.
ProjectionProfile decode_projection_via_layers(const Graph& g,
                                               const VertexSet& a, Radius r,
                                               Vertex u);

struct VcDimension {
  std::size_t value = 0;
  // True when a shattered set of size cap + 1 exists; value is then cap + 1
  // and only a lower bound.
  bool exceeds_cap = false;

  std::string to_string() const;
};

inline constexpr std::size_t kMaxVcCap = 12;

// Searches shattered sets level by level; a candidate of size s+1 is tested
// only if all of its s-subsets were shattered.
VcDimension vc_dimension(const SetFamily& family, std::size_t cap);

// sum_{i=0}^{d} C(n, i). Throws std::overflow_error past 2^64 - 1.
std::uint64_t sauer_shelah_bound(std::uint64_t n, std::uint64_t d);

}  // namespace rdom

template <typename Tag>
struct std::hash<rdom::BasicProfile<Tag>> {
  std::size_t operator()(const rdom::BasicProfile<Tag>& p) const noexcept {
    return p.hash();
  }
};

#endif  // RDOM_PROFILES_HPP_
