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

#include "rdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "rdom/bfs.hpp"
#include "rdom/errors.hpp"

namespace rdom {

// ---------------------------------------------------------------------------
// Dist

std::uint32_t Dist::value() const {
  if (!finite_) throw ContractViolation("Dist::value() called on inf");
  return value_;
}

std::string Dist::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, const Dist& d) {
  return os << d.to_string();
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  s.members_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<Vertex>(i);
  return s;
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> members) {
  VertexSet s;
  s.members_ = std::move(members);
  return s;
}

VertexSet VertexSet::from_mask(std::span<const char> mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask(std::size_t n) const {
  std::vector<char> m(n, 0);
  for (Vertex v : members_) {
    if (v >= n) throw IndexError("vertex " + std::to_string(v) +
                                 " outside mask of size " + std::to_string(n));
    m[v] = 1;
  }
  return m;
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
  if (it == s.members_.end() || *it != v) s.members_.insert(it, v);
  return s;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
  if (it != s.members_.end() && *it == v) s.members_.erase(it);
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

// ---------------------------------------------------------------------------
// Graph

struct Graph::Storage {
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> adjacency;
};

Graph::Graph() : storage_(std::make_shared<const Storage>()) {}

Graph::Graph(std::shared_ptr<const Storage> storage)
    : storage_(std::move(storage)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw IndexError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") outside vertex range [0," + std::to_string(n) + ")");
    }
    if (u == v) throw ContractViolation("self-loop at " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()),
                 directed.end());

  auto storage = std::make_shared<Storage>();
  storage->offsets.assign(n + 1, 0);
  storage->adjacency.reserve(directed.size());
  for (const auto& [u, v] : directed) {
    ++storage->offsets[u + 1];
    storage->adjacency.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    storage->offsets[i + 1] += storage->offsets[i];
  }
  return Graph(std::move(storage));
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::size_t Graph::num_vertices() const {
  return storage_->offsets.size() - 1;
}

std::size_t Graph::num_edges() const { return storage_->adjacency.size() / 2; }

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  const auto& s = *storage_;
  return std::span<const Vertex>(s.adjacency.data() + s.offsets[v],
                                 s.offsets[v + 1] - s.offsets[v]);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= num_vertices()) {
    throw IndexError("vertex " + std::to_string(v) + " outside [0," +
                     std::to_string(num_vertices()) + ")");
  }
}

void Graph::check_vertices(const VertexSet& s) const {
  if (!s.empty()) check_vertex(s.back());
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  ensure_vertices(static_cast<std::size_t>(std::max(u, v)) + 1);
  edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() const { return Graph::from_edges(n_, edges_); }

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

constexpr std::uint64_t kMaxVertexId = 0xfffffffeull;

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) fn(line_no, line);
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;
  std::size_t max_id_plus_one = 0;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto toks = split_ws(line);
    if (toks[0] == "p") {
      if (declared_n) throw ParseError(line_no, "duplicate header");
      if (!edges.empty()) throw ParseError(line_no, "header after edges");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'p <n>'");
      auto n = parse_uint(toks[1]);
      if (!n || *n > kMaxVertexId) {
        throw ParseError(line_no, "bad vertex count '" + std::string(toks[1]) +
                                      "'");
      }
      declared_n = static_cast<std::size_t>(*n);
      return;
    }
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got '" + std::string(line) +
                                    "'");
    }
    auto u = parse_uint(toks[0]);
    auto v = parse_uint(toks[1]);
    if (!u || !v || *u >= kMaxVertexId || *v >= kMaxVertexId) {
      throw ParseError(line_no, "bad vertex id in '" + std::string(line) + "'");
    }
    if (*u == *v) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    }
    edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    max_id_plus_one =
        std::max<std::size_t>(max_id_plus_one, std::max(*u, *v) + 1);
  });

  std::size_t n = max_id_plus_one;
  if (declared_n) {
    if (*declared_n < max_id_plus_one) {
      throw ParseError(0, "header declares " + std::to_string(*declared_n) +
                              " vertices but ids reach " +
                              std::to_string(max_id_plus_one - 1));
    }
    n = *declared_n;
  }
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(std::istream& in) { return parse_edge_list(read_all(in)); }

Graph load_edge_list_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

VertexSet parse_vertex_set(std::string_view text) {
  std::vector<Vertex> ids;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    for (auto tok : split_ws(line)) {
      auto v = parse_uint(tok);
      if (!v || *v >= kMaxVertexId) {
        throw ParseError(line_no, "bad vertex id '" + std::string(tok) + "'");
      }
      ids.push_back(static_cast<Vertex>(*v));
    }
  });
  return VertexSet(std::move(ids));
}

VertexSet load_vertex_set_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_vertex_set(read_all(in));
}

void write_vertex_set(std::ostream& out, const VertexSet& s) {
  for (Vertex v : s) out << v << '\n';
}

// ---------------------------------------------------------------------------
// Distances

DistanceMap::DistanceMap(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

Dist DistanceMap::at(Vertex v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const Entry& e, Vertex key) { return e.first < key; });
  if (it == entries_.end() || it->first != v) return Dist::inf();
  return Dist::of(it->second);
}

VertexSet DistanceMap::domain() const {
  std::vector<Vertex> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return VertexSet::from_sorted(std::move(out));
}

DistanceMap bfs_within(const Graph& g, Vertex source, Radius r) {
  BoundedBfs bfs(g);
  std::vector<DistanceMap::Entry> entries;
  for (Vertex v : bfs.run(source, r)) entries.emplace_back(v, bfs.distance(v));
  return DistanceMap(std::move(entries));
}

VertexSet ball(const Graph& g, Vertex v, Radius r) {
  BoundedBfs bfs(g);
  auto reached = bfs.run(v, r);
  return VertexSet(std::vector<Vertex>(reached.begin(), reached.end()));
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u,
                                                 Vertex v, Radius r) {
  g.check_vertex(v);
  BoundedBfs bfs(g);
  bfs.run(u, r);
  if (!bfs.reached(v)) return std::nullopt;

  std::vector<Vertex> path{v};
  Vertex cur = v;
  while (cur != u) {
    const std::uint32_t want = bfs.distance(cur) - 1;
    // Neighbor lists are sorted, so the first match has the lowest id.
    for (Vertex w : g.neighbors(cur)) {
      if (bfs.reached(w) && bfs.distance(w) == want) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<Vertex> InducedSubgraph::to_child(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<Vertex>(it - to_parent.begin());
}

VertexSet InducedSubgraph::lift(const VertexSet& child_set) const {
  std::vector<Vertex> out;
  out.reserve(child_set.size());
  for (Vertex c : child_set) out.push_back(to_parent.at(c));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet InducedSubgraph::restrict(const VertexSet& parent_set) const {
  std::vector<Vertex> out;
  for (Vertex p : parent_set) {
    if (auto c = to_child(p)) out.push_back(*c);
  }
  return VertexSet::from_sorted(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_vertices(s);
  InducedSubgraph sub;
  sub.to_parent = s.members();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      if (w <= s[i]) continue;
      if (auto j = sub.to_child(w)) {
        edges.emplace_back(static_cast<Vertex>(i), *j);
      }
    }
  }
  sub.graph = Graph::from_edges(s.size(), edges);
  return sub;
}

bool is_r_independent(const Graph& g, const VertexSet& s, Radius r) {
  g.check_vertices(s);
  if (r == 0 || s.size() < 2) return true;
  BoundedBfs bfs(g);
  for (Vertex v : s) {
    for (Vertex w : bfs.run(v, r)) {
      if (w != v && s.contains(w)) return false;
    }
  }
  return true;
}

}  // namespace rdom
