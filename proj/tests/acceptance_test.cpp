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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mpgkit/automata.hpp"
#include "mpgkit/games.hpp"
#include "mpgkit/graph.hpp"
#include "mpgkit/safety.hpp"
#include "mpgkit/solver.hpp"
#include "mpgkit/universal.hpp"
#include "support.hpp"

namespace {

using namespace mpgkit;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<Weight> range(Weight lo, Weight hi) {
  std::vector<Weight> ws;
  for (Weight w = lo; w <= hi; ++w) ws.push_back(w);
  return ws;
}

Outcome solver_vs_oracle() {
  std::size_t mismatches = 0, yes = 0;
  const std::vector<Weight> ws = range(-2, 2);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::size_t n = 2 + seed % 5;
    double density = 0.2 + 0.1 * static_cast<double>(seed % 5);
    MeanPayoffGame g = gen_random_game(n, ws, density, 0.5, seed);
    bool expected = oracle_solve_mp(g).eve_wins;
    yes += expected;
    for (Method m : {Method::Naive, Method::Digit, Method::Sum})
      if (solve(g, m).eve_wins != expected) ++mismatches;
  }
  return {mismatches == 0,
          "500 games x 3 methods, " + std::to_string(mismatches) + " mismatches, " + std::to_string(yes) +
              " Eve wins"};
}

bool maps_into_all(const WeightedGraph& g, const std::vector<LinearGraph>& targets) {
  for (const LinearGraph& a : targets)
    if (!find_homomorphism_into_linear(g, a)) return false;
  return true;
}

Outcome exhaustive_n2() {
  const std::vector<Weight> ws{-1, 0, 1};
  std::vector<LinearGraph> targets{naive_universal(2, 2), digit_universal(2, 2), sum_universal(2, ws)};
  std::size_t failures = 0;
  std::size_t count = enumerate_mp_graphs(2, ws, ExhaustiveMode{}, [&](const WeightedGraph& g) {
    if (!maps_into_all(g, targets)) ++failures;
    return true;
  });
  return {failures == 0, std::to_string(count) + " graphs, " + std::to_string(failures) + " failures"};
}

Outcome sampled_n3() {
  const std::vector<Weight> ws{-1, 0, 1};
  std::vector<LinearGraph> targets{naive_universal(3, 2), digit_universal(3, 2), sum_universal(3, ws)};
  std::size_t failures = 0;
  std::size_t count = enumerate_mp_graphs(3, ws, SampledMode{2026, 10'000}, [&](const WeightedGraph& g) {
    if (!maps_into_all(g, targets)) ++failures;
    return true;
  });
  return {count == 10'000 && failures == 0,
          std::to_string(count) + " graphs, " + std::to_string(failures) + " failures"};
}

Outcome size_identities() {
  std::size_t exact = 0, grid = 0, bad = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (Weight b = 1;; ++b) {
      Weight p = checked_pow(b, static_cast<unsigned>(n));
      if (p > 4096) break;
      if (p % static_cast<Weight>(n) != 0) continue;
      Weight big_n = p / static_cast<Weight>(n);
      Weight expected = 2 * (p - checked_pow(b - 1, static_cast<unsigned>(n)));
      ++exact;
      if (static_cast<Weight>(digit_universal(n, big_n).size()) != expected ||
          digit_universal_size_formula(n, big_n) != expected)
        ++bad;
    }
    for (Weight big_n = 1; static_cast<Weight>(n) * big_n <= 4096; ++big_n) {
      double nn = static_cast<double>(n) * static_cast<double>(big_n);
      double bound = 4.0 * static_cast<double>(n) * std::pow(nn, 1.0 - 1.0 / static_cast<double>(n));
      ++grid;
      if (static_cast<double>(digit_universal(n, big_n).size()) > bound) ++bad;
    }
  }
  return {bad == 0, std::to_string(exact) + " perfect powers, " + std::to_string(grid) + " grid points, " +
                        std::to_string(bad) + " violations"};
}

Outcome sum_bound() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Weight> pick(-6, 6);
  std::size_t cases = 0, bad = 0;
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 2; n <= 8; ++n)
      for (int rep = 0; rep < 20; ++rep) {
        std::set<Weight> set;
        while (set.size() < k) set.insert(pick(rng));
        std::vector<Weight> ws(set.begin(), set.end());
        ++cases;
        double limit = std::pow(static_cast<double>(n), static_cast<double>(k));
        if (static_cast<double>(sum_universal(n, ws).size()) > limit) ++bad;
      }
  return {bad == 0, std::to_string(cases) + " weight sets, " + std::to_string(bad) + " over n^k"};
}

Outcome minimal_search() {
  auto found = minimal_universal_search(2, {-1, 0, 1}, 6);
  if (!found) return {false, "no universal graph of size <= 6"};
  bool ok = found->size >= 2 && found->size <= 6 && found->size == 2;
  return {ok, "minimal size " + std::to_string(found->size) + " (regression value 2)"};
}

Outcome lower_bound_k() {
  LowerBoundFamily fam(5, 3);
  LinearGraph s = sum_universal(5, fam.weights());
  bool injective = verify_lb_injectivity(fam, s);
  std::size_t seqs = fam.sequences().size();
  std::size_t implied = lb_implied_size(seqs, fam.k());
  bool ok = fam.t() == 6 && seqs == 6 && injective && implied >= 4 && s.size() >= 4;
  return {ok, std::string("injective ") + (injective ? "yes" : "no") + ", implied size " +
                  std::to_string(implied) + ", |sum| " + std::to_string(s.size())};
}

Outcome lassos() {
  struct Setup {
    std::size_t n;
    std::vector<Weight> ws;
    std::vector<SafetyAutomaton> auts;
  };
  std::vector<Setup> setups;
  for (std::size_t n = 1; n <= 4; ++n)
    for (Weight big_n = 1; big_n <= 3; ++big_n) {
      std::vector<Weight> ws = symmetric_weights(big_n);
      setups.push_back({n, ws,
                        {from_linear_universal(naive_universal(n, big_n)),
                         from_linear_universal(digit_universal(n, big_n)),
                         from_linear_universal(sum_universal(n, ws))}});
    }

  // Negative cycles need a negative letter, so N = 1 is skipped here.
  std::vector<const Setup*> signed_setups;
  for (const Setup& s : setups)
    if (s.ws.front() < 0) signed_setups.push_back(&s);

  std::mt19937_64 rng(8);
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < 10'000; ++i) {
    const Setup& s = *signed_setups[i % signed_setups.size()];
    std::uniform_int_distribution<std::size_t> len(0, 6), clen(1, 6);
    std::uniform_int_distribution<std::size_t> idx(0, s.ws.size() - 1);
    std::vector<Weight> prefix(len(rng)), cycle;
    for (Weight& w : prefix) w = s.ws[idx(rng)];
    Weight total = 0;
    do {
      cycle.assign(clen(rng), 0);
      total = 0;
      for (Weight& w : cycle) total += (w = s.ws[idx(rng)]);
    } while (total >= 0);
    bool all = true;
    for (const SafetyAutomaton& a : s.auts) all = all && !run_lasso(a, prefix, cycle);
    rejected += all;
  }

  std::size_t accepted = 0, drawn = 0;
  for (std::size_t si = 0; drawn < 10'000; si = (si + 1) % setups.size()) {
    const Setup& s = setups[si];
    enumerate_mp_graphs(s.n, s.ws, SampledMode{rng(), 50}, [&](const WeightedGraph& g) {
      std::vector<std::size_t> choice(g.num_vertices());
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& out = g.out_edges(v);
        if (out.empty()) continue;
        choice[v] = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
      }
      std::vector<int> seen(g.num_vertices(), -1);
      std::vector<Weight> word;
      VertexId v = g.init();
      while (seen[v] < 0) {
        if (g.out_edges(v).empty()) return drawn < 10'000;
        seen[v] = static_cast<int>(word.size());
        const Edge& e = g.edge(choice[v]);
        word.push_back(e.weight);
        v = e.target;
      }
      std::vector<Weight> prefix(word.begin(), word.begin() + seen[v]);
      std::vector<Weight> cycle(word.begin() + seen[v], word.end());
      bool all = true;
      for (const SafetyAutomaton& a : s.auts) all = all && run_lasso(a, prefix, cycle);
      accepted += all;
      ++drawn;
      return drawn < 10'000;
    });
  }
  return {rejected == 10'000 && accepted == 10'000,
          "rejected " + std::to_string(rejected) + "/10000 negative, accepted " + std::to_string(accepted) +
              "/10000 graph lassos"};
}

Outcome safety_solver() {
  std::mt19937_64 rng(9);
  std::size_t disagreements = 0, over = 0;
  for (int i = 0; i < 200; ++i) {
    SafetyGame g = testing::random_safety_game(1 + i % 8, rng);
    SafetySolution sol = solve_safety(g);
    testing::AlternatingReachability oracle(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (oracle.adam_forces(v) != sol.adam_region[v]) ++disagreements;
    if (sol.eve_wins == oracle.adam_forces(g.init())) ++disagreements;
    if (sol.edge_visits > 4 * g.num_edges()) ++over;
  }
  return {disagreements == 0 && over == 0, "200 games, " + std::to_string(disagreements) +
                                               " disagreements, " + std::to_string(over) +
                                               " over the edge-visit budget"};
}

Outcome saturation() {
  WeightedGraph u = to_universal_graph(from_linear_universal(naive_universal(2, 2)));
  bool no_neg = !has_negative_cycle(u);
  bool preorder = is_total_zero_preorder(u);
  bool universal = is_universal(check_universal(u, 2, {-1, 0, 1}, ExhaustiveMode{}));
  return {no_neg && preorder && universal,
          std::to_string(u.num_vertices()) + " vertices, " + std::to_string(u.num_edges()) + " edges"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"solver agrees with oracle", solver_vs_oracle},
      {"exhaustive universality n=2", exhaustive_n2},
      {"sampled universality n=3", sampled_n3},
      {"digit size identities and bound", size_identities},
      {"sum construction size bound", sum_bound},
      {"minimal universal search", minimal_search},
      {"lower bound family n=5 k=3", lower_bound_k},
      {"separating automata on lassos", lassos},
      {"safety solver vs oracle", safety_solver},
      {"saturation of naive(2,2)", saturation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
