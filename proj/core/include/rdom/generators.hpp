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

#ifndef RDOM_GENERATORS_HPP_
#define RDOM_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "rdom/graph.hpp"

namespace rdom {

enum class Family {
  kGrid,                 // w, h
  kPath,                 // n
  kCycle,                // n
  kStar,                 // leaves
  kSpider,               // legs, len
  kRandomBoundedDegree,  // n, d (seeded)
  kSubdivision,          // n, r: subdivide(K_n, r)
  kSubsetGadget,         // a
  kTree,                 // n (seeded)
  kComplete,             // n
};

std::string family_name(Family f);
// Throws std::invalid_argument for unknown names.
Family parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::kPath;
  std::map<std::string, std::uint64_t> params;
  std::uint64_t seed = 0;

  std::uint64_t param(const std::string& key) const;
  std::uint64_t param_or(const std::string& key, std::uint64_t fallback) const;
};

// "w=3,h=4" -> {w:3, h:4}.
std::map<std::string, std::uint64_t> parse_params(std::string_view text);

// Pure function of the GenSpec. Throws std::invalid_argument on bad parameters.
Graph generate(const GenSpec& spec);

Graph grid_graph(std::size_t w, std::size_t h);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center is vertex 0
// Center 0; leg i occupies 1 + i*len .. (i+1)*len, nearest the center first.
Graph spider_graph(std::size_t legs, std::size_t len);
Graph complete_graph(std::size_t n);
// Configuration model with d stubs per vertex; loops and repeated pairs are
// dropped, so every degree is at most d.
Graph random_bounded_degree_graph(std::size_t n, std::size_t d,
                                  std::uint64_t seed);
// Vertex i > 0 attaches to a uniform earlier vertex.
Graph random_tree(std::size_t n, std::uint64_t seed);
// Every edge becomes a path with r + 1 edges; the original vertices keep
// their ids and the new ones follow edge by edge.
Graph subdivide(const Graph& g, std::size_t r);
// a independent anchors 0..a-1, then one fresh vertex for each subset mask
// 0..2^a-1 (the empty subset included) adjacent to exactly that subset.
Graph subset_gadget(std::size_t a);

// Deterministic helpers shared with the tests and the bench harness.
std::uint64_t uniform_below(std::uint64_t bound, std::uint64_t& state);
VertexSet random_subset(std::size_t n, std::size_t size, std::uint64_t seed);

}  // namespace rdom

#endif  // RDOM_GENERATORS_HPP_
