// Copyright 2026 The mpgkit Authors
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

// Brute-force oracles shared by the test suites. Nothing here calls into the
// library code paths it is used to check.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "mpgkit/graph.hpp"
#include "mpgkit/safety.hpp"

namespace mpgkit::testing {

/// Every assignment of values of `a` to vertices, in lexicographic order;
/// returns the first one satisfying phi(v') - phi(v) <= w on all edges.
inline std::optional<std::vector<Weight>> brute_force_linear_hom(const WeightedGraph& g,
                                                                 const std::vector<Weight>& a) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (a[idx[e.target]] - a[idx[e.source]] > e.weight) {
        ok = false;
        break;
      }
    if (ok) {
      std::vector<Weight> phi(n);
      for (std::size_t v = 0; v < n; ++v) phi[v] = a[idx[v]];
      return phi;
    }
    std::size_t pos = n;
    while (pos > 0 && ++idx[pos - 1] == a.size()) idx[--pos] = 0;
    if (pos == 0) return std::nullopt;
  }
}

/// Negative cycle search by enumerating simple cycles (DFS from each start
/// vertex over vertices with larger id).
inline bool brute_force_negative_cycle(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> on_path(n, false);
  std::function<bool(VertexId, VertexId, Weight)> dfs = [&](VertexId start, VertexId v, Weight sum) {
    for (std::size_t i : g.out_edges(v)) {
      const Edge& e = g.edge(i);
      if (e.target == start && sum + e.weight < 0) return true;
      if (e.target > start && !on_path[e.target]) {
        on_path[e.target] = true;
        bool found = dfs(start, e.target, sum + e.weight);
        on_path[e.target] = false;
        if (found) return true;
      }
    }
    return false;
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = true;
    bool found = dfs(s, s, 0);
    on_path[s] = false;
    if (found) return true;
  }
  return false;
}

/// Whether Adam can force a visit to the losing set from v within `steps`
/// moves; memoized on (v, steps).
class AlternatingReachability {
 public:
  explicit AlternatingReachability(const SafetyGame& g) : g_(g) {}

  bool adam_forces(VertexId v) { return forces(v, g_.num_vertices()); }

 private:
  bool forces(VertexId v, std::size_t steps) {
    if (g_.is_losing(v)) return true;
    if (steps == 0) return false;
    auto key = std::make_pair(v, steps);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = g_.owner(v) == Player::Eve;
    for (std::size_t i : g_.out_edges(v)) {
      bool r = forces(g_.edge(i).second, steps - 1);
      if (g_.owner(v) == Player::Adam && r) {
        result = true;
        break;
      }
      if (g_.owner(v) == Player::Eve && !r) {
        result = false;
        break;
      }
    }
    memo_[key] = result;
    return result;
  }

  const SafetyGame& g_;
  std::map<std::pair<VertexId, std::size_t>, bool> memo_;
};

/// Random safety game with n vertices, about a third of them losing; every
/// non-losing vertex gets at least one successor.
inline SafetyGame random_safety_game(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<Player> owner(n);
  std::vector<bool> losing(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  double density = 0.15 + 0.5 * unit(rng);
  for (VertexId v = 0; v < n; ++v) {
    owner[v] = unit(rng) < 0.5 ? Player::Eve : Player::Adam;
    losing[v] = unit(rng) < 0.3;
    bool any = false;
    for (VertexId t = 0; t < n; ++t)
      if (unit(rng) < density) {
        edges.emplace_back(v, t);
        any = true;
      }
    if (!any && !losing[v]) edges.emplace_back(v, pick(rng));
  }
  return SafetyGame(n, std::move(edges), std::move(owner), std::move(losing), pick(rng));
}

}  // namespace mpgkit::testing
