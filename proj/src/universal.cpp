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

#include "mpgkit/universal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace mpgkit {

namespace {

void require_params(std::size_t n, Weight max_weight) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (max_weight < 1) throw std::invalid_argument("largest weight N must be positive");
}

Weight as_weight(std::size_t x) {
  if (x > static_cast<std::size_t>(std::numeric_limits<Weight>::max()))
    throw OverflowError("value does not fit in a weight");
  return static_cast<Weight>(x);
}

}  // namespace

std::vector<Weight> symmetric_weights(Weight max_weight) {
  std::vector<Weight> ws;
  for (Weight w = -max_weight + 1; w < max_weight; ++w) ws.push_back(w);
  return ws;
}

LinearGraph naive_universal(std::size_t n, Weight max_weight) {
  require_params(n, max_weight);
  Weight bound = checked_mul(as_weight(n), max_weight);
  std::vector<Weight> values;
  for (Weight v = -bound + 1; v < bound; ++v) values.push_back(v);
  return LinearGraph(std::move(values), symmetric_weights(max_weight));
}

Weight digit_base(std::size_t n, Weight max_weight) {
  require_params(n, max_weight);
  return ceil_root(checked_mul(as_weight(n), max_weight), static_cast<unsigned>(n));
}

bool has_low_zero_digit(Weight a, Weight base, std::size_t n) {
  if (base < 2) return true;  // base 1: nN = 1, every digit is zero
  for (std::size_t i = 0; i < n; ++i) {
    if (a % base == 0) return true;
    a /= base;
  }
  return false;
}

LinearGraph digit_universal(std::size_t n, Weight max_weight) {
  Weight b = digit_base(n, max_weight);
  Weight limit = checked_mul(2, checked_mul(as_weight(n), max_weight));
  std::vector<Weight> values;
  for (Weight a = 0; a < limit; ++a)
    if (has_low_zero_digit(a, b, n)) values.push_back(a);
  return LinearGraph(std::move(values), symmetric_weights(max_weight));
}

Weight digit_universal_size_formula(std::size_t n, Weight max_weight) {
  Weight b = digit_base(n, max_weight);
  Weight nn = checked_mul(as_weight(n), max_weight);
  return checked_mul(2, nn - checked_pow(b - 1, static_cast<unsigned>(n)));
}

LinearGraph sum_universal(std::size_t n, const std::vector<Weight>& weights) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (weights.empty()) throw std::invalid_argument("weight set must be nonempty");
  std::set<Weight> all{0};
  std::set<Weight> layer{0};
  for (std::size_t terms = 1; terms < n; ++terms) {
    std::set<Weight> next;
    for (Weight s : layer)
      for (Weight w : weights) next.insert(checked_add(s, w));
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return LinearGraph(std::vector<Weight>(all.begin(), all.end()), weights);
}

UniversalityVerdict check_universal(const LinearGraph& a, std::size_t n,
                                    const std::vector<Weight>& weights, const EnumerationMode& mode) {
  LinearGraph target = a.with_alphabet(weights);
  std::optional<WeightedGraph> bad;
  enumerate_mp_graphs(n, weights, mode, [&](const WeightedGraph& g) {
    if (find_homomorphism_into_linear(g, target)) return true;
    bad = g;
    return false;
  });
  if (bad) return Counterexample{std::move(*bad)};
  return Universal{};
}

UniversalityVerdict check_universal(const WeightedGraph& target, std::size_t n,
                                    const std::vector<Weight>& weights, const EnumerationMode& mode) {
  std::optional<WeightedGraph> bad;
  enumerate_mp_graphs(n, weights, mode, [&](const WeightedGraph& g) {
    if (find_homomorphism(g, target)) return true;
    bad = g;
    return false;
  });
  if (bad) return Counterexample{std::move(*bad)};
  return Universal{};
}

std::optional<MinimalUniversal> minimal_universal_search(std::size_t n,
                                                         const std::vector<Weight>& weights,
                                                         std::size_t max_size, ExhaustiveMode mode,
                                                         std::size_t max_subsets) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (weights.empty()) throw std::invalid_argument("weight set must be nonempty");
  Weight m = 0;
  for (Weight w : weights) m = std::max(m, w < 0 ? -w : w);
  const Weight width = checked_mul(2, checked_mul(as_weight(n - 1), m));
  // Homomorphisms into a linear graph only see differences, so every
  // candidate is translated to have minimum 0.
  std::vector<Weight> rest;
  for (Weight v = 1; v <= width; ++v) rest.push_back(v);

  // Enumerate the graphs once; every candidate is checked against them all.
  std::vector<WeightedGraph> corpus;
  enumerate_mp_graphs(n, weights, mode, [&](const WeightedGraph& g) {
    corpus.push_back(g);
    return true;
  });

  std::size_t tried = 0;
  const std::size_t top = std::min(max_size, rest.size() + 1);
  for (std::size_t size = 1; size <= top; ++size) {
    // Choose size - 1 elements of `rest` in lexicographic order.
    std::vector<std::size_t> pick(size - 1);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (++tried > max_subsets) throw CapExceededError("minimal universal search subset cap exceeded");
      std::vector<Weight> values{0};
      for (std::size_t i : pick) values.push_back(rest[i]);
      LinearGraph cand(values, weights);
      bool ok = std::all_of(corpus.begin(), corpus.end(), [&](const WeightedGraph& g) {
        return find_homomorphism_into_linear(g, cand).has_value();
      });
      if (ok) return MinimalUniversal{size, std::move(cand)};
      // Next combination.
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] == rest.size() - pick.size() + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

LinearGraph lb_family_largest_weight(std::size_t n, Weight max_weight, const std::vector<Weight>& gaps) {
  require_params(n, max_weight);
  if (gaps.size() + 1 != n) throw std::invalid_argument("expected n - 1 gaps");
  std::vector<Weight> values{0};
  Weight sum = 0;
  for (Weight g : gaps) {
    if (g < 0 || g >= max_weight) throw std::invalid_argument("gap outside [0, N)");
    sum = checked_add(sum, g);
    values.push_back(sum);
  }
  return LinearGraph(std::move(values), symmetric_weights(max_weight));
}

LowerBoundFamily::LowerBoundFamily(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if ((n - 1) % (k - 1) != 0) throw std::invalid_argument("k - 1 must divide n - 1");
  quota_ = (n - 1) / (k - 1);
  t_ = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    Weight p = checked_pow(as_weight(n), static_cast<unsigned>(j));
    weights_.push_back(p);
    t_ = checked_add(t_, p);
  }
  weights_.push_back(back_weight());
  std::sort(weights_.begin(), weights_.end());
}

Weight LowerBoundFamily::back_weight() const { return -checked_mul(as_weight(quota_), t_); }

std::vector<LowerBoundFamily::Sequence> LowerBoundFamily::sequences() const {
  std::vector<Sequence> out;
  Sequence cur(k_, 0);
  // Compositions of quota into k parts; parts are <= quota < n.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == k_) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, quota_);
  return out;
}

bool LowerBoundFamily::is_sequence(const Sequence& s) const {
  if (s.size() != k_) return false;
  std::size_t sum = 0;
  for (std::size_t x : s) {
    if (x >= n_) return false;
    sum += x;
  }
  return sum == quota_;
}

namespace {

void check_seqs(const LowerBoundFamily& fam, const std::vector<LowerBoundFamily::Sequence>& seqs) {
  if (seqs.size() + 1 != fam.k())
    throw InvalidSequenceError("expected k - 1 sequences, got " + std::to_string(seqs.size()));
  for (const auto& s : seqs)
    if (!fam.is_sequence(s)) throw InvalidSequenceError("sequence not in S");
}

}  // namespace

WeightedGraph LowerBoundFamily::cycle(const std::vector<Sequence>& seqs) const {
  check_seqs(*this, seqs);
  std::vector<Edge> edges;
  VertexId v = 0;
  for (std::size_t block = 0; block < k_; ++block)
    for (std::size_t j = 0; j + 1 < k_; ++j) {
      Weight w = checked_pow(as_weight(n_), static_cast<unsigned>(j));
      for (std::size_t r = 0; r < seqs[j][block]; ++r, ++v) edges.push_back({v, w, v + 1});
    }
  edges.push_back({v, back_weight(), 0});
  return WeightedGraph(n_, std::move(edges), 0, weights_);
}

std::vector<VertexId> LowerBoundFamily::block_ends(const std::vector<Sequence>& seqs) const {
  check_seqs(*this, seqs);
  std::vector<VertexId> ends{0};
  VertexId v = 0;
  for (std::size_t block = 0; block + 1 < k_; ++block) {
    for (std::size_t j = 0; j + 1 < k_; ++j) v += static_cast<VertexId>(seqs[j][block]);
    ends.push_back(v);
  }
  return ends;
}

bool verify_lb_injectivity(const LowerBoundFamily& fam, const LinearGraph& a) {
  const auto seqs = fam.sequences();
  LinearGraph target = a.with_alphabet(fam.weights());
  std::map<std::vector<Weight>, std::vector<std::size_t>> seen;
  std::vector<std::size_t> odo(fam.k() - 1, 0);
  bool injective = true;
  while (true) {
    std::vector<LowerBoundFamily::Sequence> tuple;
    for (std::size_t i : odo) tuple.push_back(seqs[i]);
    WeightedGraph g = fam.cycle(tuple);
    auto phi = find_homomorphism_into_linear(g, target);
    if (!phi) throw HomomorphismNotFoundError("a family cycle does not map into the given graph");
    std::vector<Weight> image;
    for (VertexId u : fam.block_ends(tuple)) image.push_back(phi->image[u]);
    if (!seen.emplace(std::move(image), odo).second) injective = false;
    std::size_t pos = odo.size();
    while (pos > 0 && ++odo[pos - 1] == seqs.size()) odo[--pos] = 0;
    if (pos == 0) break;
  }
  return injective;
}

std::size_t lb_implied_size(std::size_t num_sequences, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const Weight rhs = checked_pow(as_weight(num_sequences), static_cast<unsigned>(k - 1));
  std::size_t s = 1;
  auto reaches = [&](std::size_t cand) {
    Weight p = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (p > rhs / as_weight(cand)) return true;
      p *= as_weight(cand);
    }
    return p >= rhs;
  };
  while (!reaches(s)) ++s;
  return s;
}

}  // namespace mpgkit
