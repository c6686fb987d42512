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

#ifndef RDOM_GRAPH_HPP_
#define RDOM_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdom {

using Vertex = std::uint32_t;
using Radius = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// A hop distance, or the symbolic value INF. INF compares greater than every
// finite distance and serializes as "inf".
class Dist {
 public:
  constexpr Dist() = default;  // INF

  static constexpr Dist inf() { return Dist(); }
  static constexpr Dist of(std::uint32_t value) { return Dist(value); }

  constexpr bool is_inf() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  // Precondition: is_finite().
  std::uint32_t value() const;

  std::string to_string() const;

  friend constexpr bool operator==(const Dist&, const Dist&) = default;
  friend constexpr std::strong_ordering operator<=>(const Dist& a,
                                                    const Dist& b) {
    if (a.finite_ != b.finite_) {
      return a.finite_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }

 private:
  constexpr explicit Dist(std::uint32_t value) : finite_(true), value_(value) {}

  bool finite_ = false;
  std::uint32_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dist& d);

// A set of vertex ids kept sorted and duplicate free, so iteration order is
// always ascending.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // {0, 1, ..., n-1}.
  static VertexSet range(std::size_t n);
  // Members are trusted to be strictly ascending.
  static VertexSet from_sorted(std::vector<Vertex> members);
  // Every v with mask[v] != 0.
  static VertexSet from_mask(std::span<const char> mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  const std::vector<Vertex>& members() const { return members_; }

  // Membership mask of length n.
  std::vector<char> mask(std::size_t n) const;

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// Immutable undirected simple graph in compressed sparse row form. Copies
// share the underlying storage.
class Graph {
 public:
  Graph();

  // Self-loops and out-of-range endpoints are rejected; duplicate and
  // reversed edges collapse to one.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t num_vertices() const;
  std::size_t num_edges() const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_vertex(Vertex v) const { return v < num_vertices(); }

  // Edges as (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  // Throws IndexError unless v < n.
  void check_vertex(Vertex v) const;
  void check_vertices(const VertexSet& s) const;

 private:
  struct Storage;
  explicit Graph(std::shared_ptr<const Storage> storage);

  std::shared_ptr<const Storage> storage_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  void ensure_vertices(std::size_t n) {
    if (n > n_) n_ = n;
  }
  void add_edge(Vertex u, Vertex v);
  std::size_t num_vertices() const { return n_; }

  Graph build() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

// Edge-list text: optional "p <n>" header, one "u v" pair per line, '#'
// starts a comment. Without a header n = 1 + max id.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Whitespace separated vertex ids with '#' comments.
VertexSet parse_vertex_set(std::string_view text);
VertexSet load_vertex_set_file(const std::string& path);
void write_vertex_set(std::ostream& out, const VertexSet& s);

// Distances of every vertex within a bounded radius of a source, ascending by
// vertex id. Vertices not listed are at distance INF.
class DistanceMap {
 public:
  using Entry = std::pair<Vertex, std::uint32_t>;

  DistanceMap() = default;
  explicit DistanceMap(std::vector<Entry> entries);

  Dist at(Vertex v) const;
  bool contains(Vertex v) const { return at(v).is_finite(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  VertexSet domain() const;

 private:
  std::vector<Entry> entries_;
};

DistanceMap bfs_within(const Graph& g, Vertex source, Radius r);

// N_r[v], the closed r-neighborhood.
VertexSet ball(const Graph& g, Vertex v, Radius r);

// A path of exactly dist(u, v) edges when dist(u, v) <= r. Walking back from
// v, each step takes the lowest-id neighbor one layer closer to u.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u,
                                                 Vertex v, Radius r);

struct InducedSubgraph {
  Graph graph;
  // to_parent[i] is the id in the parent graph of child vertex i; ascending.
  std::vector<Vertex> to_parent;

  std::optional<Vertex> to_child(Vertex parent) const;
  VertexSet lift(const VertexSet& child_set) const;
  VertexSet restrict(const VertexSet& parent_set) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// True iff every two distinct members are at distance > r.
bool is_r_independent(const Graph& g, const VertexSet& s, Radius r);

}  // namespace rdom

#endif  // RDOM_GRAPH_HPP_
