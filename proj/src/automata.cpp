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

#include "mpgkit/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace mpgkit {

SafetyAutomaton::SafetyAutomaton(std::size_t num_states, StateId init, std::vector<Weight> alphabet,
                                 std::vector<StateId> transitions)
    : num_states_(num_states), init_(init), transitions_(std::move(transitions)) {
  if (num_states == 0) throw std::invalid_argument("automaton needs at least one state");
  if (init >= num_states) throw std::invalid_argument("initial state out of range");
  std::vector<std::size_t> order(alphabet.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return alphabet[a] < alphabet[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (alphabet[order[i]] == alphabet[order[i - 1]])
      throw std::invalid_argument("duplicate letter in alphabet");
  if (transitions_.size() != num_states * alphabet.size())
    throw std::invalid_argument("transition table has wrong size");
  for (StateId t : transitions_)
    if (t != kReject && t >= num_states) throw std::invalid_argument("transition target out of range");
  // Permute columns so that the alphabet is stored sorted.
  std::vector<StateId> sorted_table(transitions_.size());
  for (std::size_t q = 0; q < num_states; ++q)
    for (std::size_t i = 0; i < order.size(); ++i)
      sorted_table[q * order.size() + i] = transitions_[q * order.size() + order[i]];
  transitions_ = std::move(sorted_table);
  alphabet_.reserve(alphabet.size());
  for (std::size_t i : order) alphabet_.push_back(alphabet[i]);
}

std::optional<std::size_t> SafetyAutomaton::letter_index(Weight w) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), w);
  if (it == alphabet_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

StateId SafetyAutomaton::step(StateId q, Weight w) const {
  auto idx = letter_index(w);
  if (!idx) throw AlphabetMismatchError("letter " + std::to_string(w) + " not in automaton alphabet");
  if (q == kReject) return kReject;
  return transitions_[q * alphabet_.size() + *idx];
}

void SafetyAutomaton::set_state_values(std::vector<Weight> values) {
  if (values.size() != num_states_) throw std::invalid_argument("one value per state expected");
  state_values_ = std::move(values);
}

SafetyAutomaton from_linear_universal(const LinearGraph& a) {
  if (a.empty()) throw std::invalid_argument("linear graph must be nonempty");
  const auto& vals = a.values();
  const auto& alpha = a.alphabet();
  std::vector<StateId> table;
  table.reserve(vals.size() * alpha.size());
  for (Weight s : vals) {
    for (Weight w : alpha) {
      auto it = std::upper_bound(vals.begin(), vals.end(), checked_add(s, w));
      table.push_back(it == vals.begin() ? kReject : static_cast<StateId>(it - vals.begin() - 1));
    }
  }
  SafetyAutomaton aut(vals.size(), static_cast<StateId>(vals.size() - 1), alpha, std::move(table));
  aut.set_state_values(vals);
  return aut;
}

bool run_lasso(const SafetyAutomaton& aut, std::span<const Weight> prefix,
               std::span<const Weight> cycle) {
  if (cycle.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
  for (auto word : {prefix, cycle})
    for (Weight w : word)
      if (!aut.letter_index(w))
        throw AlphabetMismatchError("letter " + std::to_string(w) + " not in automaton alphabet");
  StateId q = aut.init();
  for (Weight w : prefix) {
    q = aut.step(q, w);
    if (q == kReject) return false;
  }
  // The state at the start of each period determines the rest of the run.
  std::vector<bool> seen(aut.size(), false);
  while (!seen[q]) {
    seen[q] = true;
    for (Weight w : cycle) {
      q = aut.step(q, w);
      if (q == kReject) return false;
    }
  }
  return true;
}

Product product(const MeanPayoffGame& game, const SafetyAutomaton& aut) {
  const WeightedGraph& g = game.graph();
  for (Weight w : g.weights())
    if (!aut.letter_index(w))
      throw AlphabetMismatchError("game weight " + std::to_string(w) + " not in automaton alphabet");

  std::map<std::pair<VertexId, StateId>, VertexId> index;
  std::vector<std::pair<VertexId, StateId>> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::size_t> source_edge;
  std::optional<VertexId> sink;

  auto intern = [&](VertexId v, StateId q) {
    if (q == kReject) {
      if (!sink) {
        sink = static_cast<VertexId>(labels.size());
        labels.emplace_back(Product::kSinkVertex, kReject);
      }
      return *sink;
    }
    auto [it, inserted] = index.emplace(std::make_pair(v, q), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(v, q);
    return it->second;
  };

  intern(g.init(), aut.init());
  // labels doubles as the BFS queue.
  for (VertexId cur = 0; cur < labels.size(); ++cur) {
    auto [v, q] = labels[cur];
    if (q == kReject) continue;
    for (std::size_t i : g.out_edges(v)) {
      const Edge& e = g.edge(i);
      VertexId succ = intern(e.target, aut.step(q, e.weight));
      edges.emplace_back(cur, succ);
      source_edge.push_back(i);
    }
  }
  if (sink) {
    edges.emplace_back(*sink, *sink);
    source_edge.push_back(Product::kNoEdge);
  }

  std::vector<Player> owner(labels.size(), Player::Adam);
  std::vector<bool> losing(labels.size(), false);
  for (VertexId p = 0; p < labels.size(); ++p) {
    if (labels[p].second == kReject)
      losing[p] = true;
    else
      owner[p] = game.owner(labels[p].first);
  }
  SafetyGame sg(labels.size(), std::move(edges), std::move(owner), std::move(losing), 0);
  return Product{std::move(sg), std::move(labels), std::move(source_edge), sink};
}

namespace {

using Dist = std::optional<Weight>;

// All-pairs shortest path weights; nullopt when no path.
std::vector<std::vector<Dist>> all_pairs(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Dist>> d(n, std::vector<Dist>(n));
  for (const Edge& e : g.edges()) {
    Dist& cur = d[e.source][e.target];
    if (!cur || e.weight < *cur) cur = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        Weight via = checked_add(*d[i][k], *d[k][j]);
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (d[i][i] && *d[i][i] < 0) throw NegativeCycleError("graph to saturate has a negative cycle");
  return d;
}

}  // namespace

std::pair<WeightedGraph, std::size_t> saturate(const WeightedGraph& g, std::vector<Weight> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  const std::size_t n = g.num_vertices();
  auto d = all_pairs(g);
  std::set<Edge> present(g.edges().begin(), g.edges().end());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::size_t added = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId u = 0; u < n; ++u)
      for (Weight w : alphabet)
        for (VertexId v = 0; v < n; ++v) {
          Edge cand{u, w, v};
          if (present.count(cand)) continue;
          // (u, w, v) closes a negative cycle iff some path v ~> u weighs < -w.
          Dist back = v == u ? Dist{0} : d[v][u];
          if (back && checked_add(*back, w) < 0) continue;
          present.insert(cand);
          edges.push_back(cand);
          ++added;
          changed = true;
          for (std::size_t i = 0; i < n; ++i) {
            Dist to_u = i == u ? Dist{0} : d[i][u];
            if (!to_u) continue;
            for (std::size_t j = 0; j < n; ++j) {
              Dist from_v = j == v ? Dist{0} : d[v][j];
              if (!from_v) continue;
              Weight via = checked_add(checked_add(*to_u, w), *from_v);
              if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
            }
          }
        }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<Weight> declared = g.weights();
  declared.insert(declared.end(), alphabet.begin(), alphabet.end());
  return {WeightedGraph(n, std::move(edges), g.init(), std::move(declared)), added};
}

WeightedGraph to_universal_graph(const SafetyAutomaton& aut) {
  // Keep only states reachable from the initial state.
  std::vector<std::optional<VertexId>> id(aut.size());
  std::vector<StateId> states{aut.init()};
  id[aut.init()] = 0;
  for (std::size_t k = 0; k < states.size(); ++k)
    for (Weight w : aut.alphabet()) {
      StateId t = aut.step(states[k], w);
      if (t != kReject && !id[t]) {
        id[t] = static_cast<VertexId>(states.size());
        states.push_back(t);
      }
    }
  // Renumber in increasing state id so that output order does not depend on
  // the exploration order.
  std::sort(states.begin(), states.end());
  for (std::size_t k = 0; k < states.size(); ++k) id[states[k]] = static_cast<VertexId>(k);

  std::vector<Edge> edges;
  for (StateId q : states)
    for (Weight w : aut.alphabet()) {
      StateId t = aut.step(q, w);
      if (t != kReject) edges.push_back({*id[q], w, *id[t]});
    }
  std::vector<Weight> alphabet = aut.alphabet();
  alphabet.push_back(0);
  WeightedGraph base(states.size(), std::move(edges), *id[aut.init()], alphabet);
  return saturate(base, alphabet).first;
}

bool is_total_zero_preorder(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges())
    if (e.weight == 0) le[e.source][e.target] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!le[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j] && !le[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k]) return false;
    }
  }
  return true;
}

}  // namespace mpgkit
