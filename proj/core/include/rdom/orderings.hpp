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

#ifndef RDOM_ORDERINGS_HPP_
#define RDOM_ORDERINGS_HPP_

#include <cstddef>
#include <vector>

#include "rdom/graph.hpp"
#include "rdom/profiles.hpp"

namespace rdom {

// A linear order on [0, n). position(v) is the rank of v; smaller ranks come
// first.
class Ordering {
 public:
  Ordering() = default;

  // sequence[i] is the vertex of rank i. Throws unless it is a permutation.
  static Ordering from_sequence(std::vector<Vertex> sequence);
  static Ordering identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  std::size_t position(Vertex v) const { return position_.at(v); }
  Vertex vertex_at(std::size_t rank) const { return sequence_.at(rank); }
  const std::vector<Vertex>& sequence() const { return sequence_; }
  bool less(Vertex u, Vertex v) const { return position_[u] < position_[v]; }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> position_;
};

// WReach_r[G, L, v]: vertices u that are the L-minimum of some path of length
// at most r starting at v.
VertexSet wreach(const Graph& g, const Ordering& order, Vertex v, Radius r);

// WReach sets of every vertex, indexed by vertex.
std::vector<VertexSet> wreach_all(const Graph& g, const Ordering& order,
                                  Radius r);

// {WReach_r[G, L, v] : v in V(G)} as a set family over V(G).
SetFamily wreach_family(const Graph& g, const Ordering& order, Radius r);

std::size_t wcol_of_order(const Graph& g, const Ordering& order, Radius r);

struct WcolExact {
  std::size_t value = 0;
  Ordering order;  // lexicographically first optimal vertex sequence
};

inline constexpr std::size_t kWcolExactMaxVertices = 9;

// Minimum over all n! orders. Throws CapExceeded when n > max_vertices.
WcolExact wcol_exact(const Graph& g, Radius r,
                     std::size_t max_vertices = kWcolExactMaxVertices);

// Smallest-last order: repeatedly delete a minimum-degree vertex (lowest id
// on ties); vertices deleted last come first.
Ordering degeneracy_order(const Graph& g);

}  // namespace rdom

#endif  // RDOM_ORDERINGS_HPP_
