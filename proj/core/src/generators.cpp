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

#include "rdom/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rdom {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::kGrid, "grid"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kStar, "star"},
    {Family::kSpider, "spider"},
    {Family::kRandomBoundedDegree, "random_bounded_degree"},
    {Family::kSubdivision, "subdivision"},
    {Family::kSubsetGadget, "subset_gadget"},
    {Family::kTree, "tree"},
    {Family::kComplete, "complete"},
}};

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return std::string(name);
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, n] : kFamilyNames) {
    if (n == name) return family;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) +
                              "'");
}

std::uint64_t GenSpec::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument(family_name(family) + " needs parameter '" +
                                key + "'");
  }
  return it->second;
}

std::uint64_t GenSpec::param_or(const std::string& key,
                                std::uint64_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::map<std::string, std::uint64_t> parse_params(std::string_view text) {
  std::map<std::string, std::uint64_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    require(eq != std::string_view::npos && eq > 0,
            "expected key=value, got '" + std::string(item) + "'");
    std::string_view value = item.substr(eq + 1);
    std::uint64_t parsed = 0;
    auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    require(ec == std::errc() && ptr == value.data() + value.size() &&
                !value.empty(),
            "bad numeric value in '" + std::string(item) + "'");
    out[std::string(item.substr(0, eq))] = parsed;
  }
  return out;
}

std::uint64_t uniform_below(std::uint64_t bound, std::uint64_t& state) {
  require(bound > 0, "uniform_below needs a positive bound");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = splitmix64(state);
    if (x < limit) return x % bound;
  }
}

VertexSet random_subset(std::size_t n, std::size_t size, std::uint64_t seed) {
  require(size <= n, "subset larger than the ground set");
  std::vector<Vertex> all = VertexSet::range(n).members();
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < size; ++i) {
    const auto j = i + uniform_below(n - i, state);
    std::swap(all[i], all[j]);
  }
  all.resize(size);
  return VertexSet(std::move(all));
}

Graph grid_graph(std::size_t w, std::size_t h) {
  std::vector<Edge> edges;
  const auto id = [w](std::size_t x, std::size_t y) {
    return static_cast<Vertex>(y * w + x);
  };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < h) edges.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  return Graph::from_edges(w * h, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i),
                       static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) { return spider_graph(leaves, 1); }

Graph spider_graph(std::size_t legs, std::size_t len) {
  require(legs == 0 || len >= 1, "spider legs need len >= 1");
  std::vector<Edge> edges;
  for (std::size_t leg = 0; leg < legs; ++leg) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < len; ++j) {
      const auto v = static_cast<Vertex>(1 + leg * len + j);
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  return Graph::from_edges(1 + legs * len, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_bounded_degree_graph(std::size_t n, std::size_t d,
                                  std::uint64_t seed) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) stubs.push_back(static_cast<Vertex>(v));
  }
  std::uint64_t state = seed;
  for (std::size_t i = stubs.size(); i > 1; --i) {
    std::swap(stubs[i - 1], stubs[uniform_below(i, state)]);
  }
  std::set<Edge> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    Vertex u = stubs[i];
    Vertex v = stubs[i + 1];
    if (u == v) continue;
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::vector<Edge> edges;
  std::uint64_t state = seed;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(uniform_below(v, state)),
                       static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

Graph subdivide(const Graph& g, std::size_t r) {
  GraphBuilder b(g.num_vertices());
  for (const auto& [u, v] : g.edges()) {
    Vertex prev = u;
    for (std::size_t i = 0; i < r; ++i) {
      const Vertex mid = b.add_vertex();
      b.add_edge(prev, mid);
      prev = mid;
    }
    b.add_edge(prev, v);
  }
  return b.build();
}

Graph subset_gadget(std::size_t a) {
  require(a <= 20, "subset_gadget limited to a <= 20");
  GraphBuilder b(a);
  for (std::size_t mask = 0; mask < (std::size_t{1} << a); ++mask) {
    const Vertex fresh = b.add_vertex();
    for (std::size_t i = 0; i < a; ++i) {
      if (mask & (std::size_t{1} << i)) b.add_edge(static_cast<Vertex>(i), fresh);
    }
  }
  return b.build();
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kGrid:
      return grid_graph(spec.param("w"), spec.param("h"));
    case Family::kPath:
      return path_graph(spec.param("n"));
    case Family::kCycle:
      return cycle_graph(spec.param("n"));
    case Family::kStar:
      return star_graph(spec.param("leaves"));
    case Family::kSpider:
      return spider_graph(spec.param("legs"), spec.param("len"));
    case Family::kRandomBoundedDegree:
      return random_bounded_degree_graph(spec.param("n"), spec.param("d"),
                                         spec.seed);
    case Family::kSubdivision:
      return subdivide(complete_graph(spec.param("n")), spec.param("r"));
    case Family::kSubsetGadget:
      return subset_gadget(spec.param("a"));
    case Family::kTree:
      return random_tree(spec.param("n"), spec.seed);
    case Family::kComplete:
      return complete_graph(spec.param("n"));
  }
  throw std::invalid_argument("unhandled family");
}

}  // namespace rdom
