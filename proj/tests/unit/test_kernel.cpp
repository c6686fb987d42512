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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rdom/errors.hpp"
#include "rdom/generators.hpp"
#include "rdom/kernel.hpp"
#include "rdom/profiles.hpp"

using namespace rdom;

namespace {

constexpr OracleLimits kBig{256};

std::size_t ds(const Graph& g, const VertexSet& z, Radius r) {
  return exact_min_dominator(DominationInstance(g, z, r, 0), kBig).dominators.size();
}

std::size_t ds(const Graph& g, Radius r) {
  return ds(g, VertexSet::range(g.num_vertices()), r);
}

KernelOptions with_target(std::size_t target, bool verify = false) {
  KernelOptions o;
  o.target = target;
  o.verify = verify;
  return o;
}

// Re-derives every recorded fact of an accepted probe.
void check_probe(const Graph& g, Radius r, const VertexSet& z_before,
                 const RedundancyProbe& p) {
  REQUIRE(p.removed.has_value());
  const Vertex z = *p.removed;
  REQUIRE(z_before.contains(z));
  REQUIRE(is_dominator(DominationInstance(g, z_before, r, 0), p.approx));
  REQUIRE(p.approx.is_subset_of(p.closure));
  REQUIRE(p.selected.contains(z));
  REQUIRE(p.selected.is_subset_of(p.scattered));
  REQUIRE(p.scattered.is_subset_of(p.klass));
  REQUIRE(p.klass.is_subset_of(set_difference(z_before, p.closure)));
  const ProjectionProfile rho = projection_profile(g, z, p.closure, 3 * r);
  const DistanceProfile pi = distance_profile(g, z, p.separator, r);
  for (Vertex v : p.klass) REQUIRE(projection_profile(g, v, p.closure, 3 * r) == rho);
  for (Vertex v : p.selected) REQUIRE(distance_profile(g, v, p.separator, r) == pi);
  const InducedSubgraph rest = induced_subgraph(
      g, set_difference(VertexSet::range(g.num_vertices()), p.separator));
  REQUIRE(set_intersection(p.scattered, p.separator).empty());
  REQUIRE(is_r_independent(rest.graph, rest.restrict(p.scattered), 2 * r));
  const std::size_t buy = set_union(rho.keys(), p.separator).size();
  REQUIRE(p.buy_size == buy);
  REQUIRE(p.selected.size() >= buy + 2);
}

}  // namespace

TEST_CASE("default_core_target") {
  CHECK(default_core_target(1) == 40);
  CHECK(default_core_target(2) == 80);
  CHECK(default_core_target(0) == 0);
}

TEST_CASE("is_domination_core") {
  Graph p5 = path_graph(5);
  CHECK(is_domination_core(p5, VertexSet::range(5), 1));
  // {v2} alone is dominated by v1, which misses v4.
  CHECK_FALSE(is_domination_core(p5, {2}, 1));
  CHECK(is_domination_core(star_graph(6), {1, 2}, 1));
}

TEST_CASE("find_redundant_vertex on a large star") {
  CoreState state(DominationInstance::whole(star_graph(50), 1, 1));
  RedundancyProbe p = find_redundant_vertex(state);
  REQUIRE(p.removed.has_value());
  CHECK(*p.removed != 0);
  check_probe(state.inst.graph, 1, state.z, p);

  // Same family within oracle range.
  CoreState small(DominationInstance::whole(star_graph(19), 1, 1));
  RedundancyProbe q = find_redundant_vertex(small);
  REQUIRE(q.removed.has_value());
  CHECK(is_domination_core(small.inst.graph, small.z.without(*q.removed), 1));
}

TEST_CASE("find_redundant_vertex on tiny cores finds nothing") {
  CoreState state(DominationInstance::whole(path_graph(3), 1, 1));
  CHECK_FALSE(find_redundant_vertex(state).removed.has_value());
  state.z = {};
  CHECK_FALSE(find_redundant_vertex(state).removed.has_value());
}

TEST_CASE("find_redundant_vertex on a spider") {
  // Legs of length 2: the candidates pair up as mids and tips. Lowest-id
  // tie-breaking settles on the class of the mid vertices (odd ids).
  CoreState state(DominationInstance::whole(spider_graph(30, 2), 2, 30));
  RedundancyProbe p = find_redundant_vertex(state);
  REQUIRE(p.removed.has_value());
  check_probe(state.inst.graph, 2, state.z, p);

  CoreState small(DominationInstance::whole(spider_graph(9, 2), 2, 9));
  RedundancyProbe q = find_redundant_vertex(small);
  REQUIRE(q.removed.has_value());
  const VertexSet after = small.z.without(*q.removed);
  CHECK(is_domination_core(small.inst.graph, after, 2));
  CHECK(ds(small.inst.graph, after, 2) == ds(small.inst.graph, 2));
}

TEST_CASE("find_core examples") {
  SUBCASE("star shrinks to the target") {
    CoreOutcome out = find_core(DominationInstance::whole(star_graph(50), 1, 1),
                                with_target(5));
    CHECK_FALSE(out.rejection_witness.has_value());
    CHECK(out.state.z.size() <= 5);
    CoreOutcome small = find_core(DominationInstance::whole(star_graph(19), 1, 1),
                                  with_target(5, true));
    CHECK(small.state.z.size() <= 5);
    CHECK(is_domination_core(star_graph(19), small.state.z, 1));
    CHECK(small.state.verified_steps == small.state.trace.size());
    CHECK(small.state.verification_failures == 0);
  }
  SUBCASE("k = 0 rejects immediately") {
    CoreOutcome out = find_core(DominationInstance::whole(path_graph(4), 1, 0));
    REQUIRE(out.rejection_witness.has_value());
    CHECK(out.rejection_witness->size() == 1);
  }
  SUBCASE("long path rejects with a scattered witness") {
    CoreOutcome out = find_core(DominationInstance::whole(path_graph(20), 1, 2));
    REQUIRE(out.rejection_witness.has_value());
    const VertexSet& w = *out.rejection_witness;
    CHECK(w == VertexSet{0, 3, 6});
    CHECK(is_r_independent(path_graph(20), w, 2));
  }
}

TEST_CASE("build_kernel_from_core examples") {
  SUBCASE("star leaves collapse") {
    Graph g = star_graph(100);
    KernelResult k = build_kernel_from_core(g, {0, 1}, 1);
    CHECK(k.g_prime.num_vertices() <= 4);
    CHECK(ds(k.g_prime, k.z_prime, 1) == 1);
    CHECK(ds(g, {0, 1}, 1) == 1);
  }
  SUBCASE("Z = V keeps everything") {
    Graph g = grid_graph(3, 4);
    KernelResult k = build_kernel_from_core(g, VertexSet::range(12), 2);
    CHECK(k.g_prime.edges() == g.edges());
    CHECK(k.z_prime == VertexSet::range(12));
  }
  SUBCASE("cycle with spread dominatees") {
    Graph g = cycle_graph(12);
    VertexSet z{0, 3, 6, 9};
    KernelResult k = build_kernel_from_core(g, z, 2);
    CHECK(ds(k.g_prime, k.z_prime, 2) == ds(g, z, 2));
  }
}

TEST_CASE("kernelize examples") {
  SUBCASE("large star") {
    Graph g = star_graph(100);
    KernelResult k = kernelize(DominationInstance::whole(g, 1, 1), with_target(5));
    REQUIRE_FALSE(k.rejected());
    CHECK(k.g_prime.num_vertices() <= 10);
    CHECK((ds(k.g_prime, k.z_prime, 1) <= 1) == (ds(g, 1) <= 1));
    CHECK(k.stats.back().stage == "kernel");
    CHECK(k.stats.front().stage == "reduce");
  }
  SUBCASE("already small") {
    Graph g = grid_graph(3, 3);
    KernelResult k = kernelize(DominationInstance::whole(g, 1, 3));
    REQUIRE_FALSE(k.rejected());
    CHECK(k.g_prime.edges() == g.edges());
    CHECK(k.z_prime == VertexSet::range(9));
  }
  SUBCASE("spiders across budgets") {
    for (std::size_t legs : {2, 4, 8}) {
      Graph g = spider_graph(legs, 2);
      for (std::size_t k : {legs - 1, legs, legs + 1}) {
        KernelResult res = kernelize(DominationInstance::whole(g, 1, k), with_target(0));
        const bool yes = ds(g, 1) <= k;
        if (res.rejected()) {
          CHECK_FALSE(yes);
        } else {
          CHECK((ds(res.g_prime, res.z_prime, 1) <= k) == yes);
        }
      }
    }
  }
  SUBCASE("rejection row") {
    KernelResult k = kernelize(DominationInstance::whole(path_graph(20), 1, 2));
    CHECK(k.rejected());
    CHECK(k.verdict_string() == "rejected");
    CHECK(k.stats.back().stage == "reject");
  }
}

TEST_CASE("annotate_to_plain examples") {
  SUBCASE("P3 with one dominatee") {
    Graph g2 = annotate_to_plain(path_graph(3), {0}, 1);
    CHECK(g2.num_vertices() == 5);
    CHECK(g2.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(ds(g2, 1) == 2);
    CHECK(ds(path_graph(3), {0}, 1) + 1 == 2);
  }
  SUBCASE("Z = V adds a pendant path") {
    Graph g = grid_graph(3, 2);
    Graph g2 = annotate_to_plain(g, VertexSet::range(6), 2);
    CHECK(g2.num_vertices() == 6 + 3);
    CHECK(ds(g2, 2) == ds(g, 2) + 1);
  }
  SUBCASE("vertex count for r = 2") {
    Graph g = path_graph(6);
    VertexSet z{0, 5};
    const Radius r = 2;
    Graph g2 = annotate_to_plain(g, z, r);
    CHECK(g2.num_vertices() == 6 + 1 + (r - 1) + 4 * (r - 1) + 1);
  }
  CHECK_THROWS_AS(annotate_to_plain(path_graph(3), {0}, 0), ContractViolation);
}

TEST_CASE("property: every accepted removal keeps a domination core") {
  std::mt19937_64 rng(71);
  std::size_t removals = 0;
  for (int it = 0; it < 200; ++it) {
    Graph g;
    switch (it % 4) {
      case 0: g = star_graph(8 + rng() % 12); break;
      case 1: g = spider_graph(3 + rng() % 4, 1 + rng() % 3); break;
      case 2: g = random_tree(8 + rng() % 13, rng()); break;
      default: g = random_bounded_degree_graph(8 + rng() % 13, 1 + rng() % 4, rng());
    }
    if (g.num_vertices() > 20) continue;
    const Radius r = static_cast<Radius>(1 + rng() % 3);
    const auto inst = DominationInstance::whole(g, r, g.num_vertices());
    CoreOutcome out = find_core(inst, with_target(0, true));
    REQUIRE(out.state.verification_failures == 0);
    REQUIRE(out.state.verified_steps == out.state.trace.size());
    VertexSet z = VertexSet::range(g.num_vertices());
    for (const auto& step : out.state.trace) {
      check_probe(g, r, z, step);
      z = z.without(*step.removed);
    }
    REQUIRE(z == out.state.z);
    removals += out.state.trace.size();
  }
  MESSAGE("verified removals: " << removals);
  CHECK(removals >= 300);
}

TEST_CASE("property: kernel preserves the answer") {
  std::mt19937_64 rng(72);
  for (int it = 0; it < 120; ++it) {
    Graph g;
    switch (it % 4) {
      case 0: g = grid_graph(2 + rng() % 3, 2 + rng() % 4); break;
      case 1: g = spider_graph(2 + rng() % 6, 1 + rng() % 3); break;
      case 2: g = random_tree(5 + rng() % 16, rng()); break;
      default: g = random_bounded_degree_graph(5 + rng() % 16, 1 + rng() % 4, rng());
    }
    if (g.num_vertices() > 20) continue;
    const Radius r = static_cast<Radius>(1 + rng() % 3);
    const std::size_t opt = ds(g, r);
    for (std::size_t k = opt == 0 ? 0 : opt - 1; k <= opt + 1; ++k) {
      for (std::size_t target : {std::size_t{0}, default_core_target(k)}) {
        KernelResult res = kernelize(DominationInstance::whole(g, r, k), with_target(target));
        if (res.rejected()) {
          REQUIRE(opt > k);
          REQUIRE(res.rejection_witness->size() == k + 1);
          REQUIRE(is_r_independent(g, *res.rejection_witness, 2 * r));
          continue;
        }
        REQUIRE(res.z_prime.size() == res.core_size);
        REQUIRE((ds(res.g_prime, res.z_prime, r) <= k) == (opt <= k));
        // G' is the subgraph induced by to_parent.
        for (Vertex u = 0; u < res.g_prime.num_vertices(); ++u)
          for (Vertex v = 0; v < res.g_prime.num_vertices(); ++v)
            if (u != v)
              REQUIRE(res.g_prime.has_edge(u, v) ==
                      g.has_edge(res.to_parent[u], res.to_parent[v]));
      }
    }
  }
}

TEST_CASE("property: gadget adds exactly one to the domination number") {
  std::mt19937_64 rng(73);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = 1 + rng() % 10;
    Graph g = oracle::random_sparse_graph(rng, n, rng() % 3);
    VertexSet z = oracle::random_set(rng, n, 0.5);
    const Radius r = static_cast<Radius>(1 + rng() % 2);
    Graph g2 = annotate_to_plain(g, z, r);
    REQUIRE(g2.num_vertices() ==
            n + 1 + (r - 1) + (n - z.size()) * (r - 1) + 1);
    REQUIRE(ds(g2, r) == ds(g, z, r) + 1);
  }
}
