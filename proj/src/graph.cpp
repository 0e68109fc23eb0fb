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

#include "mpgkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace mpgkit {

namespace {

std::vector<Weight> sorted_unique(std::vector<Weight> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges, VertexId init,
                             std::optional<std::vector<Weight>> declared_weights)
    : num_vertices_(num_vertices), init_(init), out_(num_vertices) {
  if (num_vertices == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (init >= num_vertices) throw std::invalid_argument("initial vertex out of range");
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.source >= num_vertices || e.target >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (seen.insert(e).second) edges_.push_back(e);
  }
  if (declared_weights) {
    weights_ = sorted_unique(std::move(*declared_weights));
    for (const Edge& e : edges_)
      if (!std::binary_search(weights_.begin(), weights_.end(), e.weight))
        throw std::invalid_argument("edge weight " + std::to_string(e.weight) +
                                    " not in declared weight set");
  } else {
    std::vector<Weight> ws;
    for (const Edge& e : edges_) ws.push_back(e.weight);
    weights_ = sorted_unique(std::move(ws));
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) out_[edges_[i].source].push_back(i);
}

Weight WeightedGraph::max_abs_weight() const {
  Weight best = 0;
  for (const Edge& e : edges_) {
    if (e.weight == std::numeric_limits<Weight>::min()) throw OverflowError("weight magnitude overflows");
    best = std::max(best, e.weight < 0 ? -e.weight : e.weight);
  }
  return best;
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
  return num_vertices_ == other.num_vertices_ && init_ == other.init_ &&
         edges_ == other.edges_ && weights_ == other.weights_;
}

std::vector<bool> reachable_from_init(const WeightedGraph& g) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> stack{g.init()};
  seen[g.init()] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (std::size_t i : g.out_edges(v)) {
      VertexId t = g.edge(i).target;
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

ReachablePart restrict_to_reachable(const WeightedGraph& g) {
  std::vector<bool> keep = reachable_from_init(g);
  std::vector<std::optional<VertexId>> renumbering(g.num_vertices());
  VertexId next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (keep[v]) renumbering[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (keep[e.source]) edges.push_back({*renumbering[e.source], e.weight, *renumbering[e.target]});
  return ReachablePart{WeightedGraph(next, std::move(edges), *renumbering[g.init()], g.weights()),
                       std::move(renumbering), g.num_vertices() - next};
}

bool has_negative_cycle(const WeightedGraph& g) {
  // Bellman-Ford from a virtual source joined to every vertex by a 0-edge.
  std::vector<Weight> dist(g.num_vertices(), 0);
  for (std::size_t round = 0; round < g.num_vertices(); ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      Weight cand = checked_add(dist[e.source], e.weight);
      if (cand < dist[e.target]) {
        dist[e.target] = cand;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

std::vector<Weight> distances_from_init(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::optional<Weight>> dist(n);
  dist[g.init()] = 0;
  bool changed = true;
  for (std::size_t round = 0; changed; ++round) {
    if (round == n) throw NegativeCycleError("negative cycle reachable from init");
    changed = false;
    for (const Edge& e : g.edges()) {
      if (!dist[e.source]) continue;
      Weight cand = checked_add(*dist[e.source], e.weight);
      if (!dist[e.target] || cand < *dist[e.target]) {
        dist[e.target] = cand;
        changed = true;
      }
    }
  }
  std::vector<Weight> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!dist[v]) throw Error("vertex " + std::to_string(v) + " is not reachable from init");
    out[v] = *dist[v];
  }
  return out;
}

LinearGraph::LinearGraph(std::vector<Weight> values, std::vector<Weight> alphabet)
    : values_(sorted_unique(std::move(values))), alphabet_(sorted_unique(std::move(alphabet))) {}

bool LinearGraph::contains(Weight x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

std::optional<Weight> LinearGraph::floor(Weight x) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), x);
  if (it == values_.begin()) return std::nullopt;
  return *std::prev(it);
}

bool LinearGraph::has_edge(Weight from, Weight w, Weight to) const {
  return contains(from) && contains(to) &&
         std::binary_search(alphabet_.begin(), alphabet_.end(), w) && to - from <= w;
}

LinearGraph LinearGraph::with_alphabet(std::vector<Weight> alphabet) const {
  return LinearGraph(values_, std::move(alphabet));
}

WeightedGraph LinearGraph::materialize() const {
  if (values_.empty()) throw std::invalid_argument("cannot materialize an empty linear graph");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < values_.size(); ++i)
    for (Weight w : alphabet_)
      for (VertexId j = 0; j < values_.size(); ++j)
        if (values_[j] - values_[i] <= w) edges.push_back({i, w, j});
  return WeightedGraph(values_.size(), std::move(edges), static_cast<VertexId>(values_.size() - 1),
                       alphabet_);
}

Linearisation linearise(const WeightedGraph& g) {
  std::vector<Weight> dist = distances_from_init(g);
  LinearGraph lin(dist, g.weights());
  return Linearisation{std::move(lin), Homomorphism{std::move(dist)}};
}

bool check_homomorphism(const WeightedGraph& g, const LinearGraph& a, const Homomorphism& phi) {
  if (phi.image.size() != g.num_vertices()) return false;
  for (Weight x : phi.image)
    if (!a.contains(x)) return false;
  for (const Edge& e : g.edges())
    if (!a.has_edge(phi.image[e.source], e.weight, phi.image[e.target])) return false;
  return true;
}

std::optional<Homomorphism> find_homomorphism_into_linear(const WeightedGraph& g,
                                                          const LinearGraph& a) {
  if (a.empty()) return std::nullopt;
  for (const Edge& e : g.edges())
    if (!std::binary_search(a.alphabet().begin(), a.alphabet().end(), e.weight))
      return std::nullopt;
  const std::size_t n = g.num_vertices();
  std::vector<Weight> phi(n, a.max());
  std::deque<VertexId> work;
  std::vector<bool> queued(n, true);
  for (VertexId v = 0; v < n; ++v) work.push_back(v);
  while (!work.empty()) {
    VertexId u = work.front();
    work.pop_front();
    queued[u] = false;
    for (std::size_t i : g.out_edges(u)) {
      const Edge& e = g.edge(i);
      Weight limit = checked_add(phi[u], e.weight);
      if (phi[e.target] <= limit) continue;
      std::optional<Weight> lowered = a.floor(limit);
      if (!lowered) return std::nullopt;
      phi[e.target] = *lowered;
      if (!queued[e.target]) {
        queued[e.target] = true;
        work.push_back(e.target);
      }
    }
  }
  return Homomorphism{std::move(phi)};
}

bool check_homomorphism(const WeightedGraph& g, const WeightedGraph& target, const VertexMap& phi) {
  if (phi.size() != g.num_vertices()) return false;
  std::set<Edge> present(target.edges().begin(), target.edges().end());
  for (VertexId x : phi)
    if (x >= target.num_vertices()) return false;
  for (const Edge& e : g.edges())
    if (!present.count({phi[e.source], e.weight, phi[e.target]})) return false;
  return true;
}

std::optional<VertexMap> find_homomorphism(const WeightedGraph& g, const WeightedGraph& target,
                                           std::size_t max_nodes) {
  const std::size_t n = g.num_vertices();
  std::set<Edge> present(target.edges().begin(), target.edges().end());
  VertexMap phi(n, 0);
  std::size_t nodes = 0;
  // Vertex v is assigned at depth v; an edge is checked once both endpoints are.
  std::function<bool(VertexId)> assign = [&](VertexId v) {
    if (v == n) return true;
    for (VertexId x = 0; x < target.num_vertices(); ++x) {
      if (++nodes > max_nodes) throw CapExceededError("homomorphism search node cap exceeded");
      phi[v] = x;
      bool ok = true;
      for (const Edge& e : g.edges()) {
        if (std::max(e.source, e.target) != v) continue;
        if (!present.count({phi[e.source], e.weight, phi[e.target]})) {
          ok = false;
          break;
        }
      }
      if (ok && assign(v + 1)) return true;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return phi;
}

bool verify_zero_cycle_rigidity(const WeightedGraph& cycle, const LinearGraph& a,
                                const Homomorphism& phi) {
  const std::size_t n = cycle.num_vertices();
  if (cycle.num_edges() != n) throw std::invalid_argument("not a single cycle");
  Weight total = 0;
  std::vector<bool> visited(n, false);
  VertexId v = cycle.init();
  for (std::size_t step = 0; step < n; ++step) {
    if (visited[v] || cycle.out_edges(v).size() != 1) throw std::invalid_argument("not a single cycle");
    visited[v] = true;
    const Edge& e = cycle.edge(cycle.out_edges(v)[0]);
    total = checked_add(total, e.weight);
    v = e.target;
  }
  if (v != cycle.init()) throw std::invalid_argument("not a single cycle");
  if (total != 0) throw NotAZeroCycleError("cycle has total weight " + std::to_string(total));
  if (!check_homomorphism(cycle, a, phi)) throw std::invalid_argument("map is not a homomorphism");
  for (const Edge& e : cycle.edges())
    if (phi.image[e.target] - phi.image[e.source] != e.weight) return false;
  return true;
}

std::size_t enumerate_mp_graphs(std::size_t n, const std::vector<Weight>& weights,
                                const EnumerationMode& mode,
                                const std::function<bool(const WeightedGraph&)>& visit) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::vector<Weight> ws = sorted_unique(weights);
  if (ws.empty()) throw std::invalid_argument("weight set must be nonempty");
  std::vector<Edge> candidates;
  for (VertexId u = 0; u < n; ++u)
    for (Weight w : ws)
      for (VertexId v = 0; v < n; ++v) candidates.push_back({u, w, v});

  std::size_t visited = 0;
  auto emit = [&](std::vector<Edge> edges) {
    ReachablePart part = restrict_to_reachable(WeightedGraph(n, std::move(edges), 0, ws));
    if (has_negative_cycle(part.graph)) return true;
    ++visited;
    return visit(part.graph);
  };

  if (const auto* ex = std::get_if<ExhaustiveMode>(&mode)) {
    if (candidates.size() > ex->max_candidate_edges || candidates.size() >= 63)
      throw CapExceededError("exhaustive enumeration over " + std::to_string(candidates.size()) +
                             " candidate edges exceeds cap " +
                             std::to_string(ex->max_candidate_edges));
    const std::uint64_t total = std::uint64_t{1} << candidates.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (mask >> i & 1) edges.push_back(candidates[i]);
      if (!emit(std::move(edges))) break;
    }
    return visited;
  }

  // Sampled: a random density, then candidate edges in random order, each kept
  // with that probability unless it would close a negative cycle.
  const auto& sm = std::get<SampledMode>(mode);
  std::mt19937_64 rng(sm.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (visited < sm.count) {
    std::vector<Edge> order = candidates;
    std::shuffle(order.begin(), order.end(), rng);
    double density = unit(rng);
    std::vector<Edge> edges;
    for (const Edge& e : order) {
      if (unit(rng) >= density) continue;
      edges.push_back(e);
      if (has_negative_cycle(WeightedGraph(n, edges, 0, ws))) edges.pop_back();
    }
    if (!emit(std::move(edges))) break;
  }
  return visited;
}

}  // namespace mpgkit
