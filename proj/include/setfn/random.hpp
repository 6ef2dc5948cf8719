// Copyright 2026 The Setfn Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setfn/construct.hpp"
#include "setfn/graph.hpp"
#include "setfn/transform.hpp"

namespace setfn {

// Generators are pure functions of (parameters, seed) and produce identical
// output on every platform. Batch runners derive the seed of instance i from
// a root seed as root_seed + i, so parallel and serial batches see the same
// instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // splitmix64
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound 0 yields 0.
  std::size_t below(std::size_t bound) {
    return bound == 0 ? 0 : static_cast<std::size_t>(next() % bound);
  }

  // Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1u; }

 private:
  std::uint64_t state_;
};

// Default cap for generated instances; exhaustive checks on larger ground
// sets get expensive quickly.
inline constexpr std::size_t kMaxRandomGround = 12;

namespace detail {

inline void require_generator_size(std::size_t n) {
  if (n > kMaxRandomGround)
    throw domain_error("generator size exceeds " +
                       std::to_string(kMaxRandomGround) + " elements");
}

}  // namespace detail

inline std::vector<std::string> numbered_labels(const std::string& prefix,
                                                std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Coverage polymatroid: each element owns a random subset of a universe and
// r(X) is the size of the union of the owned subsets. Always the rank
// function of an integer-valued polymatroid.
inline SetFunction random_coverage_polymatroid(std::size_t n,
                                               std::size_t universe_size,
                                               std::uint64_t seed) {
  detail::require_generator_size(n);
  if (universe_size > 32)
    throw domain_error("universe size exceeds 32");
  Rng rng(seed);
  const std::uint32_t universe_mask =
      universe_size >= 32 ? 0xffffffffu
                          : (std::uint32_t{1} << universe_size) - 1u;
  std::vector<std::uint32_t> owned(n);
  for (auto& s : owned)
    s = static_cast<std::uint32_t>(rng.next()) & universe_mask;
  GroundSet ground(numbered_labels("x", n));
  std::vector<std::uint32_t> unions(ground.table_size(), 0);
  for (Mask m = 1; m < unions.size(); ++m)
    unions[m] = unions[m & (m - 1)] | owned[std::countr_zero(m)];
  std::vector<Rat> table(ground.table_size());
  for (Mask m = 0; m < table.size(); ++m)
    table[m] = Rat(std::popcount(unions[m]));
  return SetFunction(std::move(ground), std::move(table));
}

// Random multigraph with the given number of edges and no isolated
// vertices. Loops and parallel edges arise naturally; loops can be
// suppressed.
inline Graph random_graph(std::size_t edge_count, std::uint64_t seed,
                          bool allow_loops = true) {
  detail::require_generator_size(edge_count);
  Rng rng(seed);
  std::size_t pool = edge_count == 0 ? 0 : 1 + rng.below(edge_count + 2);
  if (!allow_loops && edge_count > 0 && pool < 2) pool = 2;
  std::vector<EdgeSpec> edges;
  std::vector<bool> used(pool, false);
  for (std::size_t i = 0; i < edge_count; ++i) {
    const std::size_t u = rng.below(pool);
    std::size_t v = rng.below(pool);
    if (!allow_loops && v == u) v = (u + 1 + rng.below(pool - 1)) % pool;
    used[u] = used[v] = true;
    edges.push_back({"e" + std::to_string(i + 1),
                     "v" + std::to_string(u + 1),
                     "v" + std::to_string(v + 1)});
  }
  std::vector<std::string> vertices;
  for (std::size_t j = 0; j < pool; ++j)
    if (used[j]) vertices.push_back("v" + std::to_string(j + 1));
  return Graph(std::move(vertices), edges);
}

// Rank function of a random matroid: a uniform matroid or the cycle matroid
// of a random graph. With loopless = true every singleton value is 1.
inline SetFunction random_matroid(std::size_t n, std::uint64_t seed,
                                  bool loopless = false) {
  detail::require_generator_size(n);
  Rng rng(seed);
  if (rng.coin()) {
    const std::size_t rank =
        loopless ? (n == 0 ? 0 : 1 + rng.below(n)) : rng.below(n + 1);
    return uniform_matroid(rank, numbered_labels("x", n));
  }
  return cycle_matroid(random_graph(n, rng.next(), /*allow_loops=*/!loopless));
}

// Random integer polymatroid with every singleton value at most k.
inline SetFunction random_k_polymatroid(std::size_t n, unsigned k,
                                        std::uint64_t seed) {
  detail::require_generator_size(n);
  if (k == 0) throw domain_error("k must be positive");
  Rng rng(seed);
  switch (rng.below(3)) {
    case 0: {
      // coverage with member subsets of size at most k
      const std::size_t universe = n + 2;
      std::vector<std::uint32_t> owned(n, 0);
      for (auto& s : owned) {
        const std::size_t size = rng.below(k + 1);
        for (std::size_t j = 0; j < size; ++j)
          s |= std::uint32_t{1} << rng.below(universe);
      }
      GroundSet ground(numbered_labels("x", n));
      std::vector<std::uint32_t> unions(ground.table_size(), 0);
      for (Mask m = 1; m < unions.size(); ++m)
        unions[m] = unions[m & (m - 1)] | owned[std::countr_zero(m)];
      std::vector<Rat> table(ground.table_size());
      for (Mask m = 0; m < table.size(); ++m)
        table[m] = Rat(std::popcount(unions[m]));
      return SetFunction(std::move(ground), std::move(table));
    }
    case 1: {
      // sum of k uniform matroid ranks
      SetFunction out =
          uniform_matroid(rng.below(n + 1), numbered_labels("x", n));
      for (unsigned j = 1; j < k; ++j)
        out = sum(out,
                  uniform_matroid(rng.below(n + 1), numbered_labels("x", n)));
      return out;
    }
    default:
      return uniform_matroid(rng.below(n + 1), numbered_labels("x", n));
  }
}

enum class ConnectivitySource { coverage, graph, matroid_lambda };

// A guaranteed connectivity function, deterministic by seed: the
// connectivity function of a random polymatroid, graph, or matroid.
inline SetFunction random_connectivity(std::size_t n, std::uint64_t seed,
                                       ConnectivitySource source) {
  detail::require_generator_size(n);
  Rng rng(seed);
  switch (source) {
    case ConnectivitySource::coverage:
      return connectivity_of(random_coverage_polymatroid(n, n + 2, rng.next()),
                             Enforce::force);
    case ConnectivitySource::graph:
      return graph_connectivity(random_graph(n, rng.next()));
    case ConnectivitySource::matroid_lambda:
    default:
      return connectivity_of(random_matroid(n, rng.next()), Enforce::force);
  }
}

// An arbitrary set function for oracle-equivalence testing: a raw random
// table, a genuine coverage polymatroid, or a polymatroid with one perturbed
// entry.
inline SetFunction random_set_function(std::size_t n, std::uint64_t seed) {
  detail::require_generator_size(n);
  Rng rng(seed);
  switch (rng.below(3)) {
    case 0: {
      GroundSet ground(numbered_labels("x", n));
      std::vector<Rat> table(ground.table_size());
      for (auto& v : table) v = make_rat(rng.range(-4, 8), rng.range(1, 3));
      return SetFunction(std::move(ground), std::move(table));
    }
    case 1:
      return random_coverage_polymatroid(n, n + 2, rng.next());
    default: {
      const SetFunction base =
          random_coverage_polymatroid(n, n + 2, rng.next());
      std::vector<Rat> table(base.table());
      const std::size_t at = rng.below(table.size());
      table[at] += make_rat(rng.coin() ? 1 : -1, rng.range(1, 2));
      return SetFunction(base.ground(), std::move(table));
    }
  }
}

}  // namespace setfn
