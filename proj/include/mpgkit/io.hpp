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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mpgkit/automata.hpp"
#include "mpgkit/games.hpp"
#include "mpgkit/graph.hpp"

namespace mpgkit {

// MPG v1, line oriented, '#' starts a comment:
//
//   mpg 1
//   init <id>
//   vertex <id> <E|A>
//   edge <src> <weight> <dst>
//
// Vertex ids must be exactly 0..n-1 (any declaration order). Edges may
// precede the declaration of their endpoints.

/// Throws ParseError with the 1-based line and column of the problem.
MeanPayoffGame parse_game(std::string_view text);

/// Canonical form: header, init, vertices by id, edges in stored order.
std::string print_game(const MeanPayoffGame& game);

/// Edges of a plain weighted graph in MPG syntax without owners, used to
/// report counterexamples.
std::string print_graph(const WeightedGraph& g);

/// One signed decimal per line, sorted ascending. Blank lines and '#'
/// comments are ignored on input.
LinearGraph parse_linear_graph(std::string_view text, std::vector<Weight> alphabet);
std::string print_linear_graph(const LinearGraph& a);

/// `state <id>` lines, then `trans <state> <weight> <state|BOT>` lines.
/// States carrying a value are printed as `state <id> <value>`.
std::string print_automaton(const SafetyAutomaton& aut);

/// Comma-separated integers, e.g. "-1,0,1". Throws std::invalid_argument.
std::vector<Weight> parse_weight_list(std::string_view text);

inline constexpr std::string_view kBenchHeader =
    "method,n,m,N,k,universal_size,build_ms,solve_ms,answer";

struct BenchRecord {
  std::string method;
  std::size_t n = 0;
  std::size_t m = 0;
  Weight max_weight = 0;
  std::size_t k = 0;
  std::size_t universal_size = 0;
  double build_ms = 0;
  double solve_ms = 0;
  bool answer = false;
};

/// One CSV row without trailing newline. The two *_ms columns are the only
/// nondeterministic fields.
std::string to_csv_row(const BenchRecord& r);

}  // namespace mpgkit
