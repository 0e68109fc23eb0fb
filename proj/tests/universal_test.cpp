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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "mpgkit/automata.hpp"
#include "support.hpp"

namespace mpgkit {
namespace {

std::vector<Weight> range(Weight lo, Weight hi) {
  std::vector<Weight> out;
  for (Weight v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

TEST(Naive, Examples) {
  EXPECT_EQ(naive_universal(2, 2).values(), range(-3, 3));
  EXPECT_EQ(naive_universal(1, 1).values(), (std::vector<Weight>{0}));
  EXPECT_EQ(naive_universal(3, 1).values(), range(-2, 2));
  EXPECT_EQ(naive_universal(2, 2).alphabet(), range(-1, 1));
  for (std::size_t n = 1; n <= 6; ++n)
    for (Weight N = 1; N <= 5; ++N)
      EXPECT_EQ(naive_universal(n, N).size(), static_cast<std::size_t>(2 * n * N - 1));
}

TEST(Digit, BaseIsIntegerCeilingRoot) {
  EXPECT_EQ(digit_base(2, 2), 2);
  EXPECT_EQ(digit_base(2, 3), 3);  // 6 -> 3
  EXPECT_EQ(digit_base(3, 9), 3);  // 27 exactly
  EXPECT_EQ(digit_base(3, 10), 4);
  EXPECT_EQ(digit_base(1, 7), 7);
  EXPECT_EQ(ceil_root(std::numeric_limits<Weight>::max(), 2), 3037000500);
}

TEST(Digit, TwoTwo) {
  // [0, 8) minus the values whose two low binary digits are both 1.
  LinearGraph d = digit_universal(2, 2);
  EXPECT_EQ(d.values(), (std::vector<Weight>{0, 1, 2, 4, 5, 6}));
  EXPECT_EQ(digit_universal_size_formula(2, 2), 6);
}

TEST(Digit, OneVertex) {
  for (Weight N = 2; N <= 6; ++N) EXPECT_EQ(digit_universal(1, N).values(), (std::vector<Weight>{0, N}));
}

TEST(Digit, MembershipMatchesDefinition) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (Weight N = 1; N <= 6; ++N) {
      Weight b = digit_base(n, N);
      LinearGraph d = digit_universal(n, N);
      for (Weight a = 0; a < static_cast<Weight>(2 * n) * N; ++a) {
        bool zero = false;
        Weight x = a;
        for (std::size_t i = 0; i < n; ++i, x /= b) zero = zero || (b > 1 && x % b == 0);
        if (b == 1) zero = true;
        EXPECT_EQ(d.contains(a), zero) << n << " " << N << " " << a;
      }
    }
}

// Every linearised (n, [-N, N])-graph is a set of at most n integers whose
// consecutive gaps are in [0, N]; a rigid chain with zero 2-cycles on those
// gaps can only map by translation. So a linear graph is universal for these
// weights iff every such chain maps into it.
bool accepts_all_rigid_chains(const LinearGraph& a, std::size_t n, Weight N) {
  std::vector<Weight> ws = range(-N, N);
  LinearGraph target = a.with_alphabet(ws);
  std::vector<Weight> gaps(n - 1, 0);
  while (true) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) {
      edges.push_back({i, gaps[i], i + 1});
      edges.push_back({i + 1, -gaps[i], i});
    }
    if (!find_homomorphism_into_linear(WeightedGraph(n, edges, 0, ws), target)) return false;
    std::size_t pos = gaps.size();
    while (pos > 0 && ++gaps[pos - 1] > N) gaps[--pos] = 0;
    if (pos == 0) return true;
  }
}

TEST(Digit, UniversalOnRigidChainsIncludingNonExactRoots) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (Weight N = 1; N <= 4; ++N) EXPECT_TRUE(accepts_all_rigid_chains(digit_universal(n, N), n, N)) << n << "," << N;
}

TEST(Digit, RigidChainsCatchTooSmallGraphs) {
  EXPECT_FALSE(accepts_all_rigid_chains(LinearGraph({0, 1, 5, 6}, {0}), 2, 2));
}

TEST(Sum, Examples) {
  EXPECT_EQ(sum_universal(3, {-1, 2}).values(), (std::vector<Weight>{-2, -1, 0, 1, 2, 4}));
  EXPECT_EQ(sum_universal(1, {3, 7}).values(), (std::vector<Weight>{0}));
  EXPECT_EQ(sum_universal(2, {5}).values(), (std::vector<Weight>{0, 5}));
}

TEST(Sum, MatchesDynamicProgrammingOracle) {
  // Sums as a multiset count vector: all (c_1..c_k) with total <= n - 1.
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> w(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 5;
    std::set<Weight> ws;
    while (ws.size() < 1 + static_cast<std::size_t>(trial % 3)) ws.insert(w(rng));
    std::vector<Weight> wv(ws.begin(), ws.end());
    std::set<Weight> expect;
    std::vector<std::size_t> c(wv.size(), 0);
    while (true) {
      std::size_t total = 0;
      Weight sum = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        total += c[i];
        sum += static_cast<Weight>(c[i]) * wv[i];
      }
      if (total <= n - 1) expect.insert(sum);
      std::size_t pos = c.size();
      while (pos > 0 && ++c[pos - 1] > n - 1) c[--pos] = 0;
      if (pos == 0) break;
    }
    EXPECT_EQ(sum_universal(n, wv).values(), std::vector<Weight>(expect.begin(), expect.end()));
  }
}

TEST(CheckUniversal, SingletonHasZeroCycleCounterexample) {
  UniversalityVerdict v = check_universal(LinearGraph({0}, {}), 2, {-1, 0, 1}, ExhaustiveMode{});
  ASSERT_FALSE(is_universal(v));
  const WeightedGraph& g = std::get<Counterexample>(v).graph;
  EXPECT_FALSE(has_negative_cycle(g));
  EXPECT_FALSE(find_homomorphism_into_linear(g, LinearGraph({0}, {-1, 0, 1})));
}

TEST(CheckUniversal, ConstructionsAtTwoTwo) {
  for (const LinearGraph& a : {naive_universal(2, 2), digit_universal(2, 2), sum_universal(2, {-1, 0, 1})})
    EXPECT_TRUE(is_universal(check_universal(a, 2, {-1, 0, 1}, ExhaustiveMode{})));
}

TEST(CheckUniversal, ConstructionsSampledGrid) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (Weight N = 1; N <= 3; ++N) {
      std::vector<Weight> ws = symmetric_weights(N);
      for (const LinearGraph& a : {naive_universal(n, N), digit_universal(n, N), sum_universal(n, ws)})
        EXPECT_TRUE(is_universal(check_universal(a, n, ws, SampledMode{n * 100 + N, 200})));
    }
}

TEST(CheckUniversal, AbsentImpliesBruteForceAbsent) {
  LinearGraph a({0, 2}, {-1, 0, 1});
  std::size_t failures = 0;
  enumerate_mp_graphs(2, {-1, 0, 1}, ExhaustiveMode{}, [&](const WeightedGraph& g) {
    bool fast = find_homomorphism_into_linear(g, a).has_value();
    EXPECT_EQ(fast, testing::brute_force_linear_hom(g, a.values()).has_value());
    if (!fast) ++failures;
    return true;
  });
  EXPECT_GT(failures, 0u);
}

TEST(CheckUniversal, ExplicitSaturatedTarget) {
  WeightedGraph u = to_universal_graph(from_linear_universal(naive_universal(2, 2)));
  EXPECT_TRUE(is_universal(check_universal(u, 2, {-1, 0, 1}, ExhaustiveMode{})));
  WeightedGraph tiny = LinearGraph({0}, {-1, 0, 1}).materialize();
  EXPECT_FALSE(is_universal(check_universal(tiny, 2, {-1, 0, 1}, ExhaustiveMode{})));
}

TEST(MinimalSearch, TwoVerticesUnitWeights) {
  // Oracle (Python subset enumeration): {0} fails, {0,1} is universal.
  auto r = minimal_universal_search(2, {-1, 0, 1}, 7);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->size, 2u);
  EXPECT_EQ(r->witness.values(), (std::vector<Weight>{0, 1}));
}

TEST(MinimalSearch, Trivial) {
  auto r = minimal_universal_search(1, {0}, 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->size, 1u);
}

TEST(MinimalSearch, NoneWithinBound) {
  EXPECT_FALSE(minimal_universal_search(2, {-1, 0, 1}, 1));
}

TEST(MinimalSearch, BoundChainForLargestWeight) {
  // W = (-N, N): ceil(N^(1 - 1/n)) <= minimum <= |digit|.
  for (Weight N = 2; N <= 3; ++N) {
    auto r = minimal_universal_search(2, symmetric_weights(N), 8, ExhaustiveMode{2 * 2 * 5});
    ASSERT_TRUE(r);
    EXPECT_GE(r->size, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(N)))));
    EXPECT_LE(r->size, digit_universal(2, N).size());
  }
}

TEST(LargestWeightFamily, PrefixSums) {
  EXPECT_EQ(lb_family_largest_weight(3, 4, {1, 3}).values(), (std::vector<Weight>{0, 1, 4}));
  EXPECT_EQ(lb_family_largest_weight(2, 4, {0}).values(), (std::vector<Weight>{0}));
  EXPECT_THROW(lb_family_largest_weight(2, 4, {4}), std::invalid_argument);
}

TEST(LargestWeightFamily, DistinctPositiveTuplesGiveDistinctSets) {
  std::set<std::vector<Weight>> seen;
  std::size_t tuples = 0;
  for (Weight a = 1; a < 5; ++a)
    for (Weight b = 1; b < 5; ++b) {
      ++tuples;
      seen.insert(lb_family_largest_weight(3, 5, {a, b}).values());
    }
  EXPECT_EQ(seen.size(), tuples);
}

TEST(LargestWeightFamily, ImagesDeterminedByTuple) {
  // Rigid chains on prefix sums map into digit_universal only by translation,
  // so the image tuple of the chain determines the gaps.
  const std::size_t n = 3;
  const Weight N = 3;
  LinearGraph target = digit_universal(n, N);
  std::set<std::vector<Weight>> diffs;
  for (Weight a = 0; a < N; ++a)
    for (Weight b = 0; b < N; ++b) {
      WeightedGraph chain(3, {{0, a, 1}, {1, -a, 0}, {1, b, 2}, {2, -b, 1}}, 0, symmetric_weights(N));
      auto phi = find_homomorphism_into_linear(chain, target);
      ASSERT_TRUE(phi);
      EXPECT_EQ(phi->image[1] - phi->image[0], a);
      EXPECT_EQ(phi->image[2] - phi->image[1], b);
      diffs.insert({phi->image[1] - phi->image[0], phi->image[2] - phi->image[1]});
    }
  EXPECT_EQ(diffs.size(), static_cast<std::size_t>(N * N));
}

TEST(LowerBoundFamily, FiveThree) {
  LowerBoundFamily fam(5, 3);
  EXPECT_EQ(fam.t(), 6);
  EXPECT_EQ(fam.quota(), 2u);
  EXPECT_EQ(fam.weights(), (std::vector<Weight>{-12, 1, 5}));
  EXPECT_EQ(fam.sequences().size(), 6u);  // C(4, 2)
}

TEST(LowerBoundFamily, CycleExample) {
  LowerBoundFamily fam(5, 3);
  WeightedGraph g = fam.cycle({{2, 0, 0}, {0, 2, 0}});
  ASSERT_EQ(g.num_vertices(), 5u);
  std::vector<Weight> ws;
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    ws.push_back(e.weight);
    total += e.weight;
  }
  EXPECT_EQ(ws, (std::vector<Weight>{1, 1, 5, 5, -12}));
  EXPECT_EQ(total, 0);
  EXPECT_EQ(fam.block_ends({{2, 0, 0}, {0, 2, 0}}), (std::vector<VertexId>{0, 2, 4}));
}

TEST(LowerBoundFamily, InvalidSequences) {
  LowerBoundFamily fam(5, 3);
  EXPECT_THROW(fam.cycle({{2, 0, 0}}), InvalidSequenceError);
  EXPECT_THROW(fam.cycle({{1, 0, 0}, {0, 2, 0}}), InvalidSequenceError);
  EXPECT_THROW(LowerBoundFamily(6, 3), std::invalid_argument);
  EXPECT_THROW(LowerBoundFamily(5, 1), std::invalid_argument);
}

TEST(LowerBoundFamily, EveryCycleIsZeroAndMeanPayoff) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 3}, {7, 3}, {7, 4}, {4, 2}}) {
    LowerBoundFamily fam(n, k);
    auto seqs = fam.sequences();
    std::vector<std::size_t> odo(k - 1, 0);
    while (true) {
      std::vector<LowerBoundFamily::Sequence> tuple;
      for (std::size_t i : odo) tuple.push_back(seqs[i]);
      WeightedGraph g = fam.cycle(tuple);
      EXPECT_EQ(g.num_vertices(), n);
      Weight total = 0;
      for (const Edge& e : g.edges()) total += e.weight;
      EXPECT_EQ(total, 0);
      EXPECT_TRUE(satisfies_mean_payoff(g));
      std::size_t pos = odo.size();
      while (pos > 0 && ++odo[pos - 1] == seqs.size()) odo[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

TEST(LowerBoundFamily, InjectiveAgainstSumConstruction) {
  LowerBoundFamily fam(5, 3);
  LinearGraph a = sum_universal(5, fam.weights());
  EXPECT_TRUE(verify_lb_injectivity(fam, a));
  EXPECT_EQ(lb_implied_size(6, 3), 4u);  // 36 <= s^3 first at s = 4
  EXPECT_GE(a.size(), 4u);
}

TEST(LowerBoundFamily, DegenerateKTwo) {
  LowerBoundFamily fam(4, 2);
  EXPECT_EQ(fam.sequences().size(), 4u);
  EXPECT_TRUE(verify_lb_injectivity(fam, sum_universal(4, fam.weights())));
}

TEST(LowerBoundFamily, TooSmallTargetSignalsNonUniversal) {
  LowerBoundFamily fam(5, 3);
  EXPECT_THROW(verify_lb_injectivity(fam, LinearGraph({0, 1}, {})), HomomorphismNotFoundError);
}

TEST(LbImpliedSize, Arithmetic) {
  EXPECT_EQ(lb_implied_size(6, 3), 4u);
  EXPECT_EQ(lb_implied_size(4, 2), 2u);
  EXPECT_EQ(lb_implied_size(1, 5), 1u);
  EXPECT_EQ(lb_implied_size(8, 2), 3u);
}

}  // namespace
}  // namespace mpgkit
