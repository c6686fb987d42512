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

#include "rdom/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <exception>
#include <thread>
#include <tuple>

#include "rdom/csv.hpp"
#include "rdom/errors.hpp"

namespace rdom {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_number(std::string_view value, std::size_t line) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(value) + "'");
  }
  return out;
}

struct Block {
  std::size_t line = 0;
  std::vector<std::tuple<std::size_t, std::string, std::string>> items;
};

BenchEntry entry_from_block(const Block& block) {
  BenchEntry e;
  e.line = block.line;
  bool has_family = false, has_r = false, has_k = false;
  for (const auto& [line, key, value] : block.items) {
    if (key == "family") {
      try {
        e.spec.family = parse_family(value);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line, err.what());
      }
      has_family = true;
    } else if (key == "seed") {
      e.spec.seed = parse_number(value, line);
    } else if (key == "r") {
      e.r = static_cast<Radius>(parse_number(value, line));
      has_r = true;
    } else if (key == "k") {
      e.k = parse_number(value, line);
      has_k = true;
    } else if (key == "target") {
      e.target = parse_number(value, line);
    } else if (key == "t") {
      e.closure_threshold = parse_number(value, line);
    } else {
      e.spec.params[key] = parse_number(value, line);
    }
  }
  if (!has_family) throw ParseError(block.line, "block has no 'family'");
  if (!has_r) throw ParseError(block.line, "block has no 'r'");
  if (!has_k) throw ParseError(block.line, "block has no 'k'");
  if (e.r < 1) throw ParseError(block.line, "r must be at least 1");
  return e;
}

std::string opt_field(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::vector<std::string> to_fields(const BenchRow& row) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", row.wall_ms);
  return {row.family,
          std::to_string(row.n),
          std::to_string(row.m),
          std::to_string(row.r),
          std::to_string(row.k),
          std::to_string(row.z_final),
          opt_field(row.kernel_vertices),
          row.rejected ? "true" : "false",
          opt_field(row.witness),
          ms,
          std::to_string(row.seed)};
}

}  // namespace

std::vector<BenchEntry> parse_bench_plan(std::string_view text) {
  std::vector<BenchEntry> plan;
  Block block;
  std::size_t line_no = 0;
  const auto flush = [&] {
    if (!block.items.empty()) plan.push_back(entry_from_block(block));
    block = Block{};
  };
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      flush();
      if (text.empty()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(line_no, "expected key=value");
    }
    if (block.items.empty()) block.line = line_no;
    block.items.emplace_back(line_no, std::string(trim(line.substr(0, eq))),
                             std::string(trim(line.substr(eq + 1))));
  }
  flush();
  return plan;
}

BenchRow run_bench_entry(const BenchEntry& entry, bool verify) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = generate(entry.spec);
  KernelOptions options;
  options.target = entry.target;
  options.closure_threshold = entry.closure_threshold;
  options.verify = verify;
  const KernelResult result =
      kernelize(DominationInstance::whole(g, entry.r, entry.k), options);
  const auto stop = std::chrono::steady_clock::now();

  BenchRow row;
  row.family = family_name(entry.spec.family);
  row.n = g.num_vertices();
  row.m = g.num_edges();
  row.r = entry.r;
  row.k = entry.k;
  row.z_final = result.core_size;
  row.rejected = result.rejected();
  if (row.rejected) {
    row.witness = result.rejection_witness->size();
  } else {
    row.kernel_vertices = result.g_prime.num_vertices();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  row.seed = entry.spec.seed;
  return row;
}

std::vector<std::string> bench_csv_header() {
  return {"family", "n",        "m",       "r",       "k",   "z_final",
          "kernel_n", "rejected", "witness", "wall_ms", "seed"};
}

void run_bench(const std::vector<BenchEntry>& plan, std::ostream& out,
               std::size_t workers, bool verify) {
  std::vector<std::optional<BenchRow>> rows(plan.size());
  std::vector<std::exception_ptr> errors(plan.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < plan.size();) {
      try {
        rows[i] = run_bench_entry(plan[i], verify);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, plan.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  CsvWriter csv(out, bench_csv_header());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    csv.row(to_fields(*rows[i]));
  }
}

}  // namespace rdom
