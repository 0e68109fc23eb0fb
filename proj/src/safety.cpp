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

#include "mpgkit/safety.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace mpgkit {

SafetyGame::SafetyGame(std::size_t num_vertices, std::vector<std::pair<VertexId, VertexId>> edges,
                       std::vector<Player> owner, std::vector<bool> losing, VertexId init)
    : edges_(std::move(edges)),
      owner_(std::move(owner)),
      losing_(std::move(losing)),
      init_(init),
      out_(num_vertices),
      in_(num_vertices) {
  if (owner_.size() != num_vertices || losing_.size() != num_vertices)
    throw std::invalid_argument("owner/losing arrays do not match vertex count");
  if (init >= num_vertices) throw std::invalid_argument("initial vertex out of range");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u >= num_vertices || v >= num_vertices) throw std::invalid_argument("edge endpoint out of range");
    out_[u].push_back(i);
    in_[v].push_back(i);
  }
  for (VertexId v = 0; v < num_vertices; ++v)
    if (!losing_[v] && out_[v].empty())
      throw std::invalid_argument("non-losing vertex " + std::to_string(v) + " has no successor");
}

SafetySolution solve_safety(const SafetyGame& game) {
  const std::size_t n = game.num_vertices();
  SafetySolution sol;
  sol.adam_region.assign(n, false);
  sol.attractor_rank.assign(n, 0);

  // Eve vertices join the attractor once every successor has.
  std::vector<std::size_t> remaining(n);
  std::deque<VertexId> frontier;
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = game.out_edges(v).size();
    if (game.is_losing(v)) {
      sol.adam_region[v] = true;
      frontier.push_back(v);
    }
  }
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop_front();
    for (std::size_t i : game.in_edges(v)) {
      ++sol.edge_visits;
      VertexId u = game.edge(i).first;
      if (sol.adam_region[u]) continue;
      if (game.owner(u) == Player::Adam || --remaining[u] == 0) {
        sol.adam_region[u] = true;
        sol.attractor_rank[u] = sol.attractor_rank[v] + 1;
        frontier.push_back(u);
      }
    }
  }

  sol.eve_wins = !sol.adam_region[game.init()];
  if (sol.eve_wins) {
    SafetyStrategy strategy(n);
    for (VertexId v = 0; v < n; ++v) {
      if (game.owner(v) != Player::Eve || sol.adam_region[v]) continue;
      for (std::size_t i : game.out_edges(v)) {
        ++sol.edge_visits;
        if (!sol.adam_region[game.edge(i).second]) {
          strategy[v] = i;
          break;
        }
      }
    }
    sol.eve_strategy = std::move(strategy);
  }
  return sol;
}

}  // namespace mpgkit
