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

#include "mpgkit/games.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace mpgkit {

MeanPayoffGame::MeanPayoffGame(WeightedGraph graph, std::vector<Player> owner)
    : graph_(std::move(graph)), owner_(std::move(owner)) {
  if (owner_.size() != graph_.num_vertices())
    throw std::invalid_argument("owner array size does not match vertex count");
  for (VertexId v = 0; v < graph_.num_vertices(); ++v)
    if (graph_.out_edges(v).empty())
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no outgoing edge");
}

bool PositionalStrategy::is_valid_for(const MeanPayoffGame& game) const {
  if (choice.size() != game.num_vertices()) return false;
  for (VertexId v = 0; v < game.num_vertices(); ++v) {
    if (!game.is_eve(v)) {
      if (choice[v]) return false;
      continue;
    }
    if (!choice[v] || *choice[v] >= game.graph().num_edges()) return false;
    if (game.graph().edge(*choice[v]).source != v) return false;
  }
  return true;
}

WeightedGraph restrict(const MeanPayoffGame& game, const PositionalStrategy& sigma) {
  if (!sigma.is_valid_for(game)) throw std::invalid_argument("strategy is not valid for game");
  const WeightedGraph& g = game.graph();
  std::vector<Edge> kept;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (game.is_eve(v)) {
      kept.push_back(g.edge(*sigma.choice[v]));
    } else {
      for (std::size_t i : g.out_edges(v)) kept.push_back(g.edge(i));
    }
  }
  WeightedGraph full(g.num_vertices(), std::move(kept), g.init(), g.weights());
  return restrict_to_reachable(full).graph;
}

bool strategy_ensures_mp(const MeanPayoffGame& game, const PositionalStrategy& sigma) {
  return !has_negative_cycle(restrict(game, sigma));
}

OracleResult oracle_solve_mp(const MeanPayoffGame& game, std::size_t max_strategies) {
  const WeightedGraph& g = game.graph();
  std::vector<VertexId> eve;
  std::size_t total = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!game.is_eve(v)) continue;
    eve.push_back(v);
    std::size_t deg = g.out_edges(v).size();
    if (total > max_strategies / deg)
      throw CapExceededError("more than " + std::to_string(max_strategies) +
                             " positional strategies to enumerate");
    total *= deg;
  }

  OracleResult result;
  // Odometer over edge positions, first Eve vertex most significant.
  std::vector<std::size_t> digit(eve.size(), 0);
  PositionalStrategy sigma{std::vector<std::optional<std::size_t>>(g.num_vertices())};
  while (true) {
    for (std::size_t i = 0; i < eve.size(); ++i) sigma.choice[eve[i]] = g.out_edges(eve[i])[digit[i]];
    ++result.strategies_tried;
    if (strategy_ensures_mp(game, sigma)) {
      result.eve_wins = true;
      result.strategy = sigma;
      return result;
    }
    std::size_t pos = eve.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < g.out_edges(eve[pos]).size()) break;
      digit[pos] = 0;
      if (pos == 0) return result;
    }
    if (eve.empty()) return result;
  }
}

MeanPayoffGame gen_random_game(std::size_t n, const std::vector<Weight>& weights,
                               double edge_density, double eve_fraction, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (weights.empty()) throw std::invalid_argument("weight set must be nonempty");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick_weight(0, weights.size() - 1);
  std::uniform_int_distribution<VertexId> pick_vertex(0, static_cast<VertexId>(n - 1));

  std::vector<Player> owner(n);
  for (auto& p : owner) p = unit(rng) < eve_fraction ? Player::Eve : Player::Adam;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    bool any = false;
    for (VertexId v = 0; v < n; ++v) {
      if (unit(rng) < edge_density) {
        edges.push_back({u, weights[pick_weight(rng)], v});
        any = true;
      }
    }
    if (!any) edges.push_back({u, weights[pick_weight(rng)], pick_vertex(rng)});
  }
  return MeanPayoffGame(WeightedGraph(n, std::move(edges), 0), std::move(owner));
}

}  // namespace mpgkit
