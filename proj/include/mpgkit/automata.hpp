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
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mpgkit/games.hpp"
#include "mpgkit/graph.hpp"
#include "mpgkit/safety.hpp"

namespace mpgkit {

using StateId = std::uint32_t;

/// The rejecting sink. Never stored as a state and not counted in size().
inline constexpr StateId kReject = std::numeric_limits<StateId>::max();

/// Deterministic safety automaton over a finite weight alphabet.
class SafetyAutomaton {
 public:
  /// `transitions` is row-major: transitions[q * alphabet.size() + i] is the
  /// successor of q on alphabet[i] (after sorting), or kReject.
  SafetyAutomaton(std::size_t num_states, StateId init, std::vector<Weight> alphabet,
                  std::vector<StateId> transitions);

  std::size_t size() const { return num_states_; }
  StateId init() const { return init_; }
  const std::vector<Weight>& alphabet() const { return alphabet_; }
  std::optional<std::size_t> letter_index(Weight w) const;

  /// Successor of q on w; kReject is absorbing. Throws AlphabetMismatchError.
  StateId step(StateId q, Weight w) const;

  /// Optional integer label per state (the linear-graph value it came from).
  const std::optional<std::vector<Weight>>& state_values() const { return state_values_; }
  void set_state_values(std::vector<Weight> values);

  friend bool operator==(const SafetyAutomaton&, const SafetyAutomaton&) = default;

 private:
  std::size_t num_states_;
  StateId init_;
  std::vector<Weight> alphabet_;
  std::vector<StateId> transitions_;
  std::optional<std::vector<Weight>> state_values_;
};

/// States are the values of `a` (state i is a.values()[i]), the initial state
/// is the largest value, and reading w from s moves to the largest s' <= s + w.
SafetyAutomaton from_linear_universal(const LinearGraph& a);

/// Runs the automaton on prefix . cycle^omega and reports acceptance.
bool run_lasso(const SafetyAutomaton& aut, std::span<const Weight> prefix,
               std::span<const Weight> cycle);

/// Safety game on the part of game x automaton reachable from (init, q_init).
///
/// All transitions into the rejecting sink go to a single shared losing
/// vertex with a self-loop.
struct Product {
  SafetyGame game;
  /// Game vertex and automaton state of each product vertex; the sink is
  /// labelled (kSinkVertex, kReject).
  std::vector<std::pair<VertexId, StateId>> labels;
  /// Product edge i was induced by game edge source_edge[i]; the sink loop
  /// has no source and stores kNoEdge.
  std::vector<std::size_t> source_edge;
  std::optional<VertexId> sink;

  static constexpr VertexId kSinkVertex = std::numeric_limits<VertexId>::max();
  static constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();
};

Product product(const MeanPayoffGame& game, const SafetyAutomaton& aut);

/// Turns an automaton into a graph over its states reachable from init: the
/// transition edges, saturated over alphabet + {0} by adding every candidate
/// edge (source asc, weight asc, target asc) that closes no negative cycle,
/// sweeping until nothing changes. The initial vertex is the initial state.
WeightedGraph to_universal_graph(const SafetyAutomaton& aut);

/// Whether "q <= q' iff (q, 0, q') is an edge" is a total preorder.
bool is_total_zero_preorder(const WeightedGraph& g);

/// Adds every admissible candidate edge to `g` in the order above; returns
/// the saturated graph and how many edges were added.
std::pair<WeightedGraph, std::size_t> saturate(const WeightedGraph& g, std::vector<Weight> alphabet);

}  // namespace mpgkit
