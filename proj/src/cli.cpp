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

#include "mpgkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mpgkit/automata.hpp"
#include "mpgkit/io.hpp"
#include "mpgkit/solver.hpp"
#include "mpgkit/universal.hpp"

namespace mpgkit {

namespace {

std::uint64_t default_seed() {
  if (const char* s = std::getenv("MPGKIT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("MPGKIT_SEED is not an unsigned integer");
    }
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Method require_method(const std::string& name, bool allow_auto) {
  auto m = parse_method(name);
  if (!m || (!allow_auto && *m == Method::Auto))
    throw std::invalid_argument("unknown method '" + name + "'");
  return *m;
}

/// Universal graph for --method with --n and either --N or --weights.
LinearGraph universal_from_flags(Method method, std::size_t n, std::optional<Weight> max_weight,
                                 const std::string& weights) {
  std::optional<std::vector<Weight>> ws;
  if (!weights.empty()) ws = parse_weight_list(weights);
  if (method == Method::Sum) {
    if (!ws) {
      if (!max_weight) throw std::invalid_argument("sum method needs --weights or --N");
      ws = symmetric_weights(*max_weight);
    }
    return sum_universal(n, *ws);
  }
  if (!max_weight) {
    if (!ws) throw std::invalid_argument("naive/digit methods need --N or --weights");
    Weight m = 1;
    for (Weight w : *ws) m = std::max(m, w < 0 ? -w : w);
    max_weight = m;
  }
  LinearGraph a = method == Method::Naive ? naive_universal(n, *max_weight) : digit_universal(n, *max_weight);
  return ws ? a.with_alphabet(*ws) : a;
}

struct GridRange {
  std::size_t lo = 0, hi = 0;
};

GridRange parse_range(const std::string& entry, const std::string& key) {
  auto eq = entry.find('=');
  if (eq == std::string::npos || entry.substr(0, eq) != key) throw std::invalid_argument("bad grid entry '" + entry + "'");
  std::string body = entry.substr(eq + 1);
  auto dots = body.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t v = std::stoul(body);
      return {v, v};
    }
    GridRange r{std::stoul(body.substr(0, dots)), std::stoul(body.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range");
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad grid entry '" + entry + "'");
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mpgkit: mean payoff games via universal graphs and separating automata"};
  app.require_subcommand(1);
  int code = kExitYes;

  std::string input, method_name = "auto", weights, values, mode = "exhaustive", out_path;
  std::string prefix, cycle;
  std::size_t n = 0, max_oracle = kDefaultOracleCap, max_enum = 16, samples = 1000, count = 100;
  std::size_t max_size = 8;
  Weight max_weight = 0;
  double density = 0.5, eve_fraction = 0.5;
  std::uint64_t seed = 0;
  bool certify_flag = false, automaton = false;
  std::vector<std::string> grid;

  auto* solve_cmd = app.add_subcommand("solve", "Decide a game with the universal-graph reduction");
  solve_cmd->add_option("--input", input, "MPG v1 file")->required();
  solve_cmd->add_option("--method", method_name, "naive|digit|sum|auto");
  solve_cmd->add_flag("--certify", certify_flag, "Check the safety solution independently");

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide a game by enumerating positional strategies");
  oracle_cmd->add_option("--input", input, "MPG v1 file")->required();
  oracle_cmd->add_option("--max-oracle", max_oracle, "Strategy enumeration cap");

  auto* build_cmd = app.add_subcommand("build-universal", "Print a universal graph or its automaton");
  build_cmd->add_option("--method", method_name, "naive|digit|sum")->required();
  build_cmd->add_option("--n", n, "Number of vertices")->required();
  auto* build_N = build_cmd->add_option("--N", max_weight, "Largest absolute weight");
  build_cmd->add_option("--weights", weights, "Weight set, e.g. -1,0,1");
  build_cmd->add_flag("--automaton", automaton, "Dump the separating automaton instead");

  auto* check_cmd = app.add_subcommand("check-universal", "Search for a counterexample to universality");
  check_cmd->add_option("--n", n, "Number of vertices")->required();
  check_cmd->add_option("--weights", weights, "Weight set")->required();
  auto* check_values = check_cmd->add_option("--values", values, "Comma-separated linear graph");
  check_cmd->add_option("--input", input, "Linear graph file")->excludes(check_values);
  check_cmd->add_option("--mode", mode, "exhaustive|sampled");
  check_cmd->add_option("--samples", samples, "Graphs drawn in sampled mode");
  check_cmd->add_option("--seed", seed, "Seed for sampled mode");
  check_cmd->add_option("--max-enum", max_enum, "Cap on candidate edges in exhaustive mode");

  auto* search_cmd = app.add_subcommand("search-minimal", "Smallest linear universal graph by brute force");
  search_cmd->add_option("--n", n, "Number of vertices")->required();
  search_cmd->add_option("--weights", weights, "Weight set")->required();
  search_cmd->add_option("--max-size", max_size, "Largest size tried");
  search_cmd->add_option("--max-enum", max_enum, "Cap on candidate edges");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random game");
  gen_cmd->add_option("--n", n, "Number of vertices")->required();
  gen_cmd->add_option("--weights", weights, "Weight set")->required();
  gen_cmd->add_option("--density", density, "Edge probability per ordered pair");
  gen_cmd->add_option("--eve-fraction", eve_fraction, "Probability that a vertex is Eve's");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--out", out_path, "Write to file instead of stdout");

  auto* bench_cmd = app.add_subcommand("bench", "Solve random games with every method, CSV output");
  bench_cmd->add_option("--grid", grid, "n=LO..HI N=LO..HI")->expected(2)->required();
  bench_cmd->add_option("--seed", seed, "Random seed");
  bench_cmd->add_option("--count", count, "Instances per grid point");
  bench_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  auto* lasso_cmd = app.add_subcommand("lasso-check", "Run a separating automaton on prefix.cycle^omega");
  lasso_cmd->add_option("--method", method_name, "naive|digit|sum")->required();
  lasso_cmd->add_option("--n", n, "Number of vertices")->required();
  auto* lasso_N = lasso_cmd->add_option("--N", max_weight, "Largest absolute weight");
  lasso_cmd->add_option("--weights", weights, "Weight set");
  lasso_cmd->add_option("--prefix", prefix, "Comma-separated prefix (may be empty)");
  lasso_cmd->add_option("--cycle", cycle, "Comma-separated cycle")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitYes : kExitUsage;
  }

  try {
    bool seed_given = false;
    for (auto* sub : {check_cmd, gen_cmd, bench_cmd})
      if (sub->parsed() && sub->count("--seed") > 0) seed_given = true;
    if (!seed_given) seed = default_seed();

    if (solve_cmd->parsed()) {
      MeanPayoffGame game = parse_game(read_file(input));
      SolveTrace trace = solve_traced(game, require_method(method_name, true));
      const SolveReport& r = trace.report;
      out << (r.eve_wins ? "YES" : "NO") << '\n'
          << "method " << to_string(r.method) << '\n'
          << "universal_size " << r.universal_size << '\n'
          << "product_vertices " << r.product_vertices << '\n'
          << "product_edges " << r.product_edges << '\n'
          << "edge_visits " << r.edge_visits << '\n';
      if (certify_flag) out << "certified " << (certify(trace.product, trace.solution) ? "yes" : "no") << '\n';
      out << "build_ms " << r.build_ms << '\n' << "solve_ms " << r.solve_ms << '\n';
      code = r.eve_wins ? kExitYes : kExitNo;
    } else if (oracle_cmd->parsed()) {
      MeanPayoffGame game = parse_game(read_file(input));
      OracleResult r = oracle_solve_mp(game, max_oracle);
      out << (r.eve_wins ? "YES" : "NO") << '\n' << "strategies_tried " << r.strategies_tried << '\n';
      code = r.eve_wins ? kExitYes : kExitNo;
    } else if (build_cmd->parsed()) {
      std::optional<Weight> N;
      if (build_N->count() > 0) N = max_weight;
      LinearGraph a = universal_from_flags(require_method(method_name, false), n, N, weights);
      out << (automaton ? print_automaton(from_linear_universal(a)) : print_linear_graph(a));
    } else if (check_cmd->parsed()) {
      std::vector<Weight> ws = parse_weight_list(weights);
      LinearGraph a = !input.empty()   ? parse_linear_graph(read_file(input), ws)
                      : !values.empty() ? LinearGraph(parse_weight_list(values), ws)
                                        : throw std::invalid_argument("give --values or --input");
      EnumerationMode em;
      if (mode == "exhaustive")
        em = ExhaustiveMode{max_enum};
      else if (mode == "sampled")
        em = SampledMode{seed, samples};
      else
        throw std::invalid_argument("unknown mode '" + mode + "'");
      UniversalityVerdict v = check_universal(a, n, ws, em);
      if (is_universal(v)) {
        out << (mode == "exhaustive" ? "universal\n" : "no counterexample found\n");
      } else {
        out << "counterexample\n" << print_graph(std::get<Counterexample>(v).graph);
      }
    } else if (search_cmd->parsed()) {
      auto r = minimal_universal_search(n, parse_weight_list(weights), max_size, ExhaustiveMode{max_enum});
      if (!r) {
        out << "none\n";
      } else {
        out << "size " << r->size << "\nwitness ";
        const auto& vs = r->witness.values();
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
        out << '\n';
      }
    } else if (gen_cmd->parsed()) {
      MeanPayoffGame g = gen_random_game(n, parse_weight_list(weights), density, eve_fraction, seed);
      if (out_path.empty()) {
        out << print_game(g);
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
        f << print_game(g);
      }
    } else if (bench_cmd->parsed()) {
      GridRange nr = parse_range(grid.at(0), "n"), wr = parse_range(grid.at(1), "N");
      if (nr.lo == 0 || wr.lo == 0) throw std::invalid_argument("grid values must be positive");
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
      }
      std::ostream& csv = out_path.empty() ? out : file;
      csv << kBenchHeader << '\n';
      std::uint64_t instance = 0;
      for (std::size_t gn = nr.lo; gn <= nr.hi; ++gn)
        for (std::size_t gw = wr.lo; gw <= wr.hi; ++gw) {
          std::vector<Weight> ws;
          for (Weight w = -static_cast<Weight>(gw); w <= static_cast<Weight>(gw); ++w) ws.push_back(w);
          for (std::size_t i = 0; i < count; ++i, ++instance) {
            MeanPayoffGame g = gen_random_game(gn, ws, 0.5, 0.5, seed * 1'000'003 + instance);
            for (Method m : {Method::Naive, Method::Digit, Method::Sum}) {
              SolveReport r = solve(g, m);
              BenchRecord rec{std::string(to_string(m)), gn, g.graph().num_edges(),
                              parameters_of(g).max_weight, g.graph().weights().size(),
                              r.universal_size, r.build_ms, r.solve_ms, r.eve_wins};
              csv << to_csv_row(rec) << '\n';
            }
          }
        }
    } else if (lasso_cmd->parsed()) {
      std::optional<Weight> N;
      if (lasso_N->count() > 0) N = max_weight;
      LinearGraph a = universal_from_flags(require_method(method_name, false), n, N, weights);
      SafetyAutomaton aut = from_linear_universal(a);
      std::vector<Weight> pre = prefix.empty() ? std::vector<Weight>{} : parse_weight_list(prefix);
      std::vector<Weight> cyc = parse_weight_list(cycle);
      out << (run_lasso(aut, pre, cyc) ? "accepted" : "rejected") << '\n';
    }
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}

}  // namespace mpgkit
