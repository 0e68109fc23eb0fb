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
#include <cstdint>
#include <optional>
#include <vector>

#include "mpgkit/graph.hpp"

namespace mpgkit {

enum class Player : std::uint8_t { Eve, Adam };

/// A weighted graph whose vertices are split between Eve and Adam. Every
/// vertex must have an outgoing edge so that plays are infinite.
class MeanPayoffGame {
 public:
  MeanPayoffGame(WeightedGraph graph, std::vector<Player> owner);

  const WeightedGraph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  Player owner(VertexId v) const { return owner_[v]; }
  bool is_eve(VertexId v) const { return owner_[v] == Player::Eve; }
  const std::vector<Player>& owners() const { return owner_; }

  friend bool operator==(const MeanPayoffGame&, const MeanPayoffGame&) = default;

 private:
  WeightedGraph graph_;
  std::vector<Player> owner_;
};

/// Eve's positional strategy: for each Eve vertex the index (into
/// graph().edges()) of the edge she takes; nullopt on Adam vertices.
struct PositionalStrategy {
  std::vector<std::optional<std::size_t>> choice;

  bool is_valid_for(const MeanPayoffGame& game) const;
  friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;
};

/// The graph of plays consistent with `sigma`: vertices reachable from init,
/// Eve vertices keeping only sigma's edge. Vertices are renumbered in
/// increasing order of their original ids.
WeightedGraph restrict(const MeanPayoffGame& game, const PositionalStrategy& sigma);

bool strategy_ensures_mp(const MeanPayoffGame& game, const PositionalStrategy& sigma);

struct OracleResult {
  bool eve_wins = false;
  /// Lexicographically first winning strategy, when Eve wins.
  std::optional<PositionalStrategy> strategy;
  std::size_t strategies_tried = 0;
};

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

/// Decides the game by trying every positional strategy of Eve in
/// lexicographic order of edge choices. Positional strategies suffice for Eve,
/// so a negative answer is definitive. Throws CapExceededError when the number
/// of strategies exceeds `max_strategies`.
OracleResult oracle_solve_mp(const MeanPayoffGame& game,
                             std::size_t max_strategies = kDefaultOracleCap);

/// Random game with `n` vertices. Each ordered pair (u, v) gets an edge with
/// probability `edge_density` and a weight drawn uniformly from `weights`;
/// vertices left without successors get one random edge. Deterministic in seed.
MeanPayoffGame gen_random_game(std::size_t n, const std::vector<Weight>& weights,
                               double edge_density, double eve_fraction, std::uint64_t seed);

}  // namespace mpgkit
