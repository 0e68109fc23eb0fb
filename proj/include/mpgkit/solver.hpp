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
#include <string>
#include <string_view>

#include "mpgkit/automata.hpp"
#include "mpgkit/games.hpp"
#include "mpgkit/safety.hpp"
#include "mpgkit/universal.hpp"

namespace mpgkit {

enum class Method { Naive, Digit, Sum, Auto };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

/// Parameters the constructions are built from: n = number of vertices,
/// N = largest absolute weight (at least 1), W = weights present.
struct GameParameters {
  std::size_t n = 1;
  Weight max_weight = 1;
  std::vector<Weight> weights;
};

GameParameters parameters_of(const MeanPayoffGame& game);

/// The universal graph `method` builds for `params`, over alphabet params.weights.
/// `method` must not be Auto.
LinearGraph build_universal(Method method, const GameParameters& params);

/// The concrete method with the smallest universal graph; ties go to
/// naive, then digit, then sum.
Method auto_select(const MeanPayoffGame& game);

struct SolveReport {
  bool eve_wins = false;
  /// The concrete construction used (never Auto).
  Method method = Method::Naive;
  std::size_t universal_size = 0;
  std::size_t product_vertices = 0;
  std::size_t product_edges = 0;
  std::size_t edge_visits = 0;
  double build_ms = 0;
  double solve_ms = 0;
};

/// Everything produced along the way, for certification and inspection.
struct SolveTrace {
  SolveReport report;
  SafetyAutomaton automaton;
  Product product;
  SafetySolution solution;
};

SolveTrace solve_traced(const MeanPayoffGame& game, Method method);

/// Decides whether Eve can ensure nonnegative mean payoff from init by
/// solving the safety game game x automaton, where the automaton comes from
/// the chosen universal graph.
inline SolveReport solve(const MeanPayoffGame& game, Method method) {
  return solve_traced(game, method).report;
}

/// Independent check of a safety solution on a product. If Eve wins, her
/// strategy must keep every play from init inside the claimed winning region,
/// which must avoid the losing set. If Adam wins, the attractor ranks must
/// witness that init is forced into the losing set.
bool certify(const Product& prod, const SafetySolution& solution);

inline bool certify(const MeanPayoffGame& game, const SafetyAutomaton& aut,
                    const SafetySolution& solution) {
  return certify(product(game, aut), solution);
}

}  // namespace mpgkit
