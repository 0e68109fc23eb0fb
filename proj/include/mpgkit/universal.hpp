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
#include <variant>
#include <vector>

#include "mpgkit/graph.hpp"

namespace mpgkit {

/// The integers strictly between -N and N.
std::vector<Weight> symmetric_weights(Weight max_weight);

/// The interval (-nN, nN) over alphabet (-N, N).
LinearGraph naive_universal(std::size_t n, Weight max_weight);

/// Base used by the digit construction: the least b with b^n >= nN.
Weight digit_base(std::size_t n, Weight max_weight);

/// Whether one of the n lowest base-b digits of a is zero.
bool has_low_zero_digit(Weight a, Weight base, std::size_t n);

/// Integers in [0, 2nN) with a zero among their n lowest base-b digits,
/// b = digit_base(n, N), over alphabet (-N, N).
///
/// Any linearised (n, (-N, N))-graph fits as a translate whose base point is
/// chosen digit by digit so that its i-th point has a zero i-th digit; this
/// is why the set can skip every value whose low digits are all nonzero.
LinearGraph digit_universal(std::size_t n, Weight max_weight);

/// 2(nN - (b - 1)^n): the size of digit_universal when b^n = nN exactly.
Weight digit_universal_size_formula(std::size_t n, Weight max_weight);

/// All sums of at most n - 1 elements of `weights` (0 included), over
/// alphabet `weights`. Distances from init in an n-vertex graph are such sums.
LinearGraph sum_universal(std::size_t n, const std::vector<Weight>& weights);

struct Universal {};
struct Counterexample {
  WeightedGraph graph;
};
using UniversalityVerdict = std::variant<Universal, Counterexample>;

inline bool is_universal(const UniversalityVerdict& v) { return std::holds_alternative<Universal>(v); }

/// Looks for an (n, W)-graph without negative cycles that has no homomorphism
/// into `a`; the first one found in enumeration order is returned. In sampled
/// mode a Universal verdict only means no counterexample was drawn.
UniversalityVerdict check_universal(const LinearGraph& a, std::size_t n,
                                    const std::vector<Weight>& weights, const EnumerationMode& mode);

/// Same check against an explicit target graph, via backtracking search.
UniversalityVerdict check_universal(const WeightedGraph& target, std::size_t n,
                                    const std::vector<Weight>& weights, const EnumerationMode& mode);

struct MinimalUniversal {
  std::size_t size = 0;
  LinearGraph witness;
};

/// Smallest linear (n, W)-universal graph with at most `max_size` values,
/// found by trying subsets of [0, 2(n-1)max|W|] that contain 0 in order of
/// size, then lexicographically. Universality is checked exhaustively.
/// Throws CapExceededError when the exhaustive check or the number of
/// subsets (`max_subsets`) is over its cap.
std::optional<MinimalUniversal> minimal_universal_search(std::size_t n,
                                                         const std::vector<Weight>& weights,
                                                         std::size_t max_size,
                                                         ExhaustiveMode mode = {},
                                                         std::size_t max_subsets = 1'000'000);

/// Prefix sums {0, w1, w1 + w2, ...} of `gaps`, over alphabet (-N, N).
LinearGraph lb_family_largest_weight(std::size_t n, Weight max_weight, const std::vector<Weight>& gaps);

/// Cycle family over the weights {1, n, ..., n^(k-2), -((n-1)/(k-1)) T} with
/// T = 1 + n + ... + n^(k-2). Requires k >= 2 and (k - 1) | (n - 1).
class LowerBoundFamily {
 public:
  LowerBoundFamily(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  /// (n - 1) / (k - 1): how often each power of n appears around the cycle.
  std::size_t quota() const { return quota_; }
  Weight t() const { return t_; }
  /// Sorted.
  const std::vector<Weight>& weights() const { return weights_; }
  /// The back edge weight -quota * T.
  Weight back_weight() const;

  using Sequence = std::vector<std::size_t>;

  /// All k-tuples over [0, n) summing to quota(), lexicographic order.
  std::vector<Sequence> sequences() const;
  bool is_sequence(const Sequence& s) const;

  /// The n-cycle induced by (s^(0), ..., s^(k-2)): block i (1-based) uses
  /// weight n^j exactly s^(j)_i times, then the back edge closes the cycle.
  /// Throws InvalidSequenceError.
  WeightedGraph cycle(const std::vector<Sequence>& seqs) const;

  /// Vertex ending block i, for i in [0, k); block 0 ends at vertex 0.
  std::vector<VertexId> block_ends(const std::vector<Sequence>& seqs) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t quota_;
  Weight t_;
  std::vector<Weight> weights_;
};

/// Maps every tuple in S^(k-1) to the images of the block ends under the
/// greatest homomorphism into `a` and reports whether this map is injective.
/// Throws HomomorphismNotFoundError if some cycle does not map into `a`.
bool verify_lb_injectivity(const LowerBoundFamily& fam, const LinearGraph& a);

/// Least s with s^k >= |S|^(k-1): the size forced by an injective map
/// S^(k-1) -> U^k.
std::size_t lb_implied_size(std::size_t num_sequences, std::size_t k);

}  // namespace mpgkit
