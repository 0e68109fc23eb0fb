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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mpgkit/arith.hpp"

namespace mpgkit {

using VertexId = std::uint32_t;

struct Edge {
  VertexId source = 0;
  Weight weight = 0;
  VertexId target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite directed graph with integer edge weights and an initial vertex.
///
/// Vertices are the dense range [0, num_vertices). Duplicate (u, w, v) triples
/// are dropped at construction, keeping the first occurrence, so edge indices
/// follow input order. The declared weight set defaults to the weights that
/// occur on edges; when given explicitly every edge weight must belong to it.
class WeightedGraph {
 public:
  WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges,
                VertexId init = 0,
                std::optional<std::vector<Weight>> declared_weights = std::nullopt);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  VertexId init() const { return init_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }
  /// Sorted, duplicate-free.
  const std::vector<Weight>& weights() const { return weights_; }
  /// Indices into edges() of the edges leaving `v`, in input order.
  std::span<const std::size_t> out_edges(VertexId v) const { return out_[v]; }

  /// Largest absolute value among edge weights; 0 for an edgeless graph.
  Weight max_abs_weight() const;

  bool operator==(const WeightedGraph& other) const;

 private:
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
  VertexId init_;
  std::vector<Weight> weights_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Vertices reachable from init, as a membership mask.
std::vector<bool> reachable_from_init(const WeightedGraph& g);

/// Result of dropping the vertices that cannot be reached from init.
struct ReachablePart {
  WeightedGraph graph;
  /// Old vertex id -> new id; nullopt for dropped vertices.
  std::vector<std::optional<VertexId>> renumbering;
  std::size_t dropped = 0;
};

/// Keeps the part of `g` reachable from init, renumbered in increasing order
/// of the old ids. The declared weight set is preserved.
ReachablePart restrict_to_reachable(const WeightedGraph& g);

bool has_negative_cycle(const WeightedGraph& g);

inline bool satisfies_mean_payoff(const WeightedGraph& g) { return !has_negative_cycle(g); }

/// Smallest path weight from init to every vertex (0 for init via the empty
/// path). Throws NegativeCycleError if a negative cycle is reachable and
/// Error if some vertex is unreachable.
std::vector<Weight> distances_from_init(const WeightedGraph& g);

/// The W-linear graph on a finite set of integers: (v, w, v') is an edge
/// whenever w is in the alphabet and v' - v <= w.
class LinearGraph {
 public:
  LinearGraph(std::vector<Weight> values, std::vector<Weight> alphabet);

  const std::vector<Weight>& values() const { return values_; }
  const std::vector<Weight>& alphabet() const { return alphabet_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(Weight x) const;
  /// Largest value <= x.
  std::optional<Weight> floor(Weight x) const;
  Weight max() const { return values_.back(); }
  Weight min() const { return values_.front(); }
  bool has_edge(Weight from, Weight w, Weight to) const;

  /// Same values over a different alphabet.
  LinearGraph with_alphabet(std::vector<Weight> alphabet) const;

  /// Explicit edge list; vertex i is values()[i], init is the largest value.
  WeightedGraph materialize() const;

  friend bool operator==(const LinearGraph&, const LinearGraph&) = default;

 private:
  std::vector<Weight> values_;
  std::vector<Weight> alphabet_;
};

/// Vertex map into a linear graph: image[v] is the value assigned to v.
struct Homomorphism {
  std::vector<Weight> image;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

struct Linearisation {
  LinearGraph graph;
  Homomorphism phi;
};

/// Maps each vertex to its distance from init; the image set is the linear
/// graph L(g). Throws NegativeCycleError.
Linearisation linearise(const WeightedGraph& g);

bool check_homomorphism(const WeightedGraph& g, const LinearGraph& a, const Homomorphism& phi);

/// Pointwise-greatest homomorphism from `g` into `a`, or nullopt if none exists.
///
/// Starts every vertex at max(a) and lowers targets along edges to the largest
/// admissible value until stable. Values only decrease, so this terminates.
std::optional<Homomorphism> find_homomorphism_into_linear(const WeightedGraph& g,
                                                          const LinearGraph& a);

/// Vertex map into an arbitrary target graph: image[v] is a target vertex id.
using VertexMap = std::vector<VertexId>;

bool check_homomorphism(const WeightedGraph& g, const WeightedGraph& target, const VertexMap& phi);

/// Backtracking search for a homomorphism into an explicit graph. Exponential;
/// refuses with CapExceededError once `max_nodes` search nodes were visited.
std::optional<VertexMap> find_homomorphism(const WeightedGraph& g, const WeightedGraph& target,
                                           std::size_t max_nodes = 10'000'000);

/// On a zero-weight cycle every homomorphism into a linear graph is tight:
/// phi(next) - phi(v) equals the edge weight. Returns whether that holds.
///
/// `cycle` must be a single simple cycle through all its vertices
/// (std::invalid_argument otherwise) of total weight zero
/// (NotAZeroCycleError otherwise); `phi` must be a homomorphism into `a`.
bool verify_zero_cycle_rigidity(const WeightedGraph& cycle, const LinearGraph& a,
                                const Homomorphism& phi);

struct ExhaustiveMode {
  /// Largest admissible number of candidate edges n * |W| * n.
  std::size_t max_candidate_edges = 16;
};

struct SampledMode {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
};

using EnumerationMode = std::variant<ExhaustiveMode, SampledMode>;

/// Calls `visit` on (n, W)-graphs without negative cycles, with every vertex
/// reachable from init = 0. Exhaustive mode walks all subsets of the candidate
/// edges (u, w, v), sampled mode draws `count` random graphs. Stops early when
/// `visit` returns false. Returns the number of graphs visited.
std::size_t enumerate_mp_graphs(std::size_t n, const std::vector<Weight>& weights,
                                const EnumerationMode& mode,
                                const std::function<bool(const WeightedGraph&)>& visit);

}  // namespace mpgkit
