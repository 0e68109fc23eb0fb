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

#include "mpgkit/io.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace mpgkit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int value{};
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

MeanPayoffGame parse_game(std::string_view text) {
  using Kind = ParseError::Kind;
  struct Located {
    std::size_t line, column;
  };
  struct PendingEdge {
    Edge edge;
    Located src_at, dst_at;
  };

  bool saw_header = false;
  std::optional<std::pair<VertexId, Located>> init;
  std::map<VertexId, std::pair<Player, Located>> vertices;
  std::vector<PendingEdge> edges;

  auto lines = split_lines(text);
  std::size_t last_line = 1;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    auto toks = tokenize(lines[ln]);
    if (toks.empty()) continue;
    last_line = line_no;
    auto fail = [&](const Token& t, const std::string& msg) -> ParseError {
      return ParseError(Kind::Syntax, line_no, t.column, msg);
    };
    auto arity = [&](std::size_t want) {
      if (toks.size() != want)
        throw fail(toks.front(), "'" + std::string(toks.front().text) + "' expects " +
                                     std::to_string(want - 1) + " arguments");
    };
    auto vertex_id = [&](const Token& t) {
      auto v = to_int<VertexId>(t.text);
      if (!v) throw fail(t, "invalid vertex id '" + std::string(t.text) + "'");
      return *v;
    };

    const std::string_view kw = toks.front().text;
    if (!saw_header) {
      if (kw != "mpg" || toks.size() != 2 || toks[1].text != "1")
        throw fail(toks.front(), "expected header 'mpg 1'");
      saw_header = true;
      continue;
    }
    if (kw == "init") {
      arity(2);
      if (init) throw ParseError(Kind::DuplicateDeclaration, line_no, toks[0].column, "duplicate init");
      init = {vertex_id(toks[1]), {line_no, toks[1].column}};
    } else if (kw == "vertex") {
      arity(3);
      VertexId v = vertex_id(toks[1]);
      Player p;
      if (toks[2].text == "E")
        p = Player::Eve;
      else if (toks[2].text == "A")
        p = Player::Adam;
      else
        throw fail(toks[2], "owner must be E or A");
      if (!vertices.emplace(v, std::make_pair(p, Located{line_no, toks[1].column})).second)
        throw ParseError(Kind::DuplicateDeclaration, line_no, toks[1].column,
                         "vertex " + std::to_string(v) + " declared twice");
    } else if (kw == "edge") {
      arity(4);
      VertexId s = vertex_id(toks[1]);
      auto w = to_int<Weight>(toks[2].text);
      if (!w) throw fail(toks[2], "invalid weight '" + std::string(toks[2].text) + "'");
      VertexId t = vertex_id(toks[3]);
      edges.push_back({{s, *w, t}, {line_no, toks[1].column}, {line_no, toks[3].column}});
    } else {
      throw fail(toks.front(), "unknown directive '" + std::string(kw) + "'");
    }
  }
  if (!saw_header) throw ParseError(Kind::Syntax, 1, 1, "missing header 'mpg 1'");
  if (!init) throw ParseError(Kind::Syntax, last_line, 1, "missing init line");
  if (vertices.empty()) throw ParseError(Kind::Syntax, last_line, 1, "no vertices declared");

  const std::size_t n = vertices.size();
  for (const auto& [v, info] : vertices)
    if (v >= n)
      throw ParseError(Kind::Syntax, info.second.line, info.second.column,
                       "vertex ids must be exactly 0.." + std::to_string(n - 1));
  if (!vertices.count(init->first))
    throw ParseError(Kind::UnknownVertex, init->second.line, init->second.column,
                     "init refers to undeclared vertex " + std::to_string(init->first));

  std::vector<bool> has_out(n, false);
  std::vector<Edge> plain;
  for (const auto& pe : edges) {
    if (!vertices.count(pe.edge.source))
      throw ParseError(Kind::UnknownVertex, pe.src_at.line, pe.src_at.column,
                       "edge from undeclared vertex " + std::to_string(pe.edge.source));
    if (!vertices.count(pe.edge.target))
      throw ParseError(Kind::UnknownVertex, pe.dst_at.line, pe.dst_at.column,
                       "edge to undeclared vertex " + std::to_string(pe.edge.target));
    has_out[pe.edge.source] = true;
    plain.push_back(pe.edge);
  }
  std::vector<Player> owner(n);
  for (const auto& [v, info] : vertices) {
    if (!has_out[v])
      throw ParseError(Kind::DeadEndVertex, info.second.line, info.second.column,
                       "vertex " + std::to_string(v) + " has no outgoing edge");
    owner[v] = info.first;
  }
  return MeanPayoffGame(WeightedGraph(n, std::move(plain), init->first), std::move(owner));
}

std::string print_game(const MeanPayoffGame& game) {
  std::ostringstream os;
  os << "mpg 1\ninit " << game.graph().init() << '\n';
  for (VertexId v = 0; v < game.num_vertices(); ++v)
    os << "vertex " << v << ' ' << (game.is_eve(v) ? 'E' : 'A') << '\n';
  for (const Edge& e : game.graph().edges())
    os << "edge " << e.source << ' ' << e.weight << ' ' << e.target << '\n';
  return os.str();
}

std::string print_graph(const WeightedGraph& g) {
  std::ostringstream os;
  os << "init " << g.init() << '\n';
  for (const Edge& e : g.edges()) os << "edge " << e.source << ' ' << e.weight << ' ' << e.target << '\n';
  return os.str();
}

LinearGraph parse_linear_graph(std::string_view text, std::vector<Weight> alphabet) {
  std::vector<Weight> values;
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto toks = tokenize(lines[ln]);
    if (toks.empty()) continue;
    if (toks.size() != 1)
      throw ParseError(ParseError::Kind::Syntax, ln + 1, toks[1].column, "one value per line expected");
    auto v = to_int<Weight>(toks[0].text);
    if (!v) throw ParseError(ParseError::Kind::Syntax, ln + 1, toks[0].column, "invalid integer");
    if (!values.empty() && *v <= values.back())
      throw ParseError(ParseError::Kind::Syntax, ln + 1, toks[0].column,
                       "values must be strictly increasing");
    values.push_back(*v);
  }
  return LinearGraph(std::move(values), std::move(alphabet));
}

std::string print_linear_graph(const LinearGraph& a) {
  std::ostringstream os;
  for (Weight v : a.values()) os << v << '\n';
  return os.str();
}

std::string print_automaton(const SafetyAutomaton& aut) {
  std::ostringstream os;
  for (StateId q = 0; q < aut.size(); ++q) {
    os << "state " << q;
    if (aut.state_values()) os << ' ' << (*aut.state_values())[q];
    os << '\n';
  }
  for (StateId q = 0; q < aut.size(); ++q)
    for (Weight w : aut.alphabet()) {
      StateId t = aut.step(q, w);
      os << "trans " << q << ' ' << w << ' ';
      if (t == kReject)
        os << "BOT";
      else
        os << t;
      os << '\n';
    }
  return os.str();
}

std::vector<Weight> parse_weight_list(std::string_view text) {
  std::vector<Weight> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    auto v = to_int<Weight>(item);
    if (!v) throw std::invalid_argument("invalid integer '" + std::string(item) + "' in list");
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string to_csv_row(const BenchRecord& r) {
  char build[32], solve[32];
  std::snprintf(build, sizeof build, "%.3f", r.build_ms);
  std::snprintf(solve, sizeof solve, "%.3f", r.solve_ms);
  std::ostringstream os;
  os << r.method << ',' << r.n << ',' << r.m << ',' << r.max_weight << ',' << r.k << ','
     << r.universal_size << ',' << build << ',' << solve << ',' << (r.answer ? "YES" : "NO");
  return os.str();
}

}  // namespace mpgkit
