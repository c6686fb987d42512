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

#ifndef RDOM_BENCH_HPP_
#define RDOM_BENCH_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdom/generators.hpp"
#include "rdom/kernel.hpp"

namespace rdom {

// One experiment: generate a graph, kernelize it with budget k.
struct BenchEntry {
  GenSpec spec;
  Radius r = 1;
  std::size_t k = 0;
  std::optional<std::size_t> target;
  std::optional<std::size_t> closure_threshold;
  std::size_t line = 0;  // first line of the block in the plan file
};

// Plan files hold blocks of key=value lines separated by blank lines; '#'
// starts a comment. Reserved keys: family, seed, r, k, target, t. Every other
// key is a family parameter.
std::vector<BenchEntry> parse_bench_plan(std::string_view text);

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  Radius r = 0;
  std::size_t k = 0;
  std::size_t z_final = 0;
  std::optional<std::size_t> kernel_vertices;  // empty when rejected
  bool rejected = false;
  std::optional<std::size_t> witness;  // filled when rejected
  double wall_ms = 0;
  std::uint64_t seed = 0;
};

BenchRow run_bench_entry(const BenchEntry& entry, bool verify);

// family,n,m,r,k,z_final,kernel_n,rejected,witness,wall_ms,seed
std::vector<std::string> bench_csv_header();

// Runs entries on `workers` threads and writes rows in plan order.
void run_bench(const std::vector<BenchEntry>& plan, std::ostream& out,
               std::size_t workers = 1, bool verify = false);

}  // namespace rdom

#endif  // RDOM_BENCH_HPP_
