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

#include "mpgkit/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace mpgkit {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Naive: return "naive";
    case Method::Digit: return "digit";
    case Method::Sum: return "sum";
    case Method::Auto: return "auto";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::Naive, Method::Digit, Method::Sum, Method::Auto})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

GameParameters parameters_of(const MeanPayoffGame& game) {
  const WeightedGraph& g = game.graph();
  return GameParameters{g.num_vertices(), std::max<Weight>(1, g.max_abs_weight()), g.weights()};
}

LinearGraph build_universal(Method method, const GameParameters& params) {
  switch (method) {
    case Method::Naive: return naive_universal(params.n, params.max_weight).with_alphabet(params.weights);
    case Method::Digit: return digit_universal(params.n, params.max_weight).with_alphabet(params.weights);
    case Method::Sum: return sum_universal(params.n, params.weights);
    case Method::Auto: break;
  }
  throw std::invalid_argument("build_universal needs a concrete method");
}

Method auto_select(const MeanPayoffGame& game) {
  GameParameters params = parameters_of(game);
  Method best = Method::Naive;
  std::size_t best_size = build_universal(Method::Naive, params).size();
  for (Method m : {Method::Digit, Method::Sum}) {
    std::size_t s = build_universal(m, params).size();
    if (s < best_size) {
      best = m;
      best_size = s;
    }
  }
  return best;
}

SolveTrace solve_traced(const MeanPayoffGame& game, Method method) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

  if (method == Method::Auto) method = auto_select(game);
  auto t0 = clock::now();
  LinearGraph universal = build_universal(method, parameters_of(game));
  SafetyAutomaton aut = from_linear_universal(universal);
  Product prod = product(game, aut);
  auto t1 = clock::now();
  SafetySolution sol = solve_safety(prod.game);
  auto t2 = clock::now();

  SolveReport report;
  report.eve_wins = sol.eve_wins;
  report.method = method;
  report.universal_size = universal.size();
  report.product_vertices = prod.game.num_vertices();
  report.product_edges = prod.game.num_edges();
  report.edge_visits = sol.edge_visits;
  report.build_ms = ms(t1 - t0);
  report.solve_ms = ms(t2 - t1);
  return SolveTrace{report, std::move(aut), std::move(prod), std::move(sol)};
}

bool certify(const Product& prod, const SafetySolution& solution) {
  const SafetyGame& g = prod.game;
  const std::size_t n = g.num_vertices();
  if (solution.adam_region.size() != n) return false;
  if (solution.eve_wins != !solution.adam_region[g.init()]) return false;

  if (!solution.eve_wins) {
    if (solution.attractor_rank.size() != n) return false;
    // Every attractor vertex is losing or moves strictly down in rank.
    for (VertexId v = 0; v < n; ++v) {
      if (!solution.adam_region[v]) continue;
      std::size_t r = solution.attractor_rank[v];
      if (g.is_losing(v)) {
        if (r != 0) return false;
        continue;
      }
      if (r == 0) return false;
      auto lower = [&](std::size_t i) {
        VertexId t = g.edge(i).second;
        return solution.adam_region[t] && solution.attractor_rank[t] < r;
      };
      auto outs = g.out_edges(v);
      bool ok = g.owner(v) == Player::Adam ? std::any_of(outs.begin(), outs.end(), lower)
                                           : std::all_of(outs.begin(), outs.end(), lower);
      if (!ok) return false;
    }
    return true;
  }

  if (!solution.eve_strategy || solution.eve_strategy->size() != n) return false;
  const SafetyStrategy& strat = *solution.eve_strategy;
  // Replay every play from init consistent with the strategy.
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{g.init()};
  seen[g.init()] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (g.is_losing(v) || solution.adam_region[v]) return false;
    auto visit = [&](std::size_t i) {
      VertexId t = g.edge(i).second;
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    };
    if (g.owner(v) == Player::Eve) {
      if (!strat[v] || *strat[v] >= g.num_edges() || g.edge(*strat[v]).first != v) return false;
      visit(*strat[v]);
    } else {
      for (std::size_t i : g.out_edges(v)) visit(i);
    }
  }
  return true;
}

}  // namespace mpgkit
