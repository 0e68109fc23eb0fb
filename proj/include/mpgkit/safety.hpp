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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mpgkit/games.hpp"

namespace mpgkit {

/// Game on an unlabelled graph where Eve must avoid the losing set forever.
///
/// Losing vertices are absorbing for the purpose of the game and may have no
/// successors; every other vertex needs at least one.
class SafetyGame {
 public:
  SafetyGame(std::size_t num_vertices, std::vector<std::pair<VertexId, VertexId>> edges,
             std::vector<Player> owner, std::vector<bool> losing, VertexId init);

  std::size_t num_vertices() const { return owner_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  VertexId init() const { return init_; }
  Player owner(VertexId v) const { return owner_[v]; }
  bool is_losing(VertexId v) const { return losing_[v]; }
  const std::pair<VertexId, VertexId>& edge(std::size_t i) const { return edges_[i]; }
  std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }
  std::span<const std::size_t> out_edges(VertexId v) const { return out_[v]; }
  std::span<const std::size_t> in_edges(VertexId v) const { return in_[v]; }

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<Player> owner_;
  std::vector<bool> losing_;
  VertexId init_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// Edge index chosen by Eve at each vertex of her winning region.
using SafetyStrategy = std::vector<std::optional<std::size_t>>;

struct SafetySolution {
  bool eve_wins = false;
  /// Present iff eve_wins; defined on Eve vertices outside adam_region.
  std::optional<SafetyStrategy> eve_strategy;
  /// Adam's attractor to the losing set.
  std::vector<bool> adam_region;
  /// Round at which each attractor vertex was added (0 for losing vertices).
  std::vector<std::size_t> attractor_rank;
  /// Number of edge traversals performed; linear in num_edges().
  std::size_t edge_visits = 0;
};

/// Backward attractor with per-vertex successor counters, O(n + m).
SafetySolution solve_safety(const SafetyGame& game);

}  // namespace mpgkit
