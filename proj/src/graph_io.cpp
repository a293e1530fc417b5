#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "orbsplice/graphs.hpp"

namespace orbsplice {

bool is_valid_vertex_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

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
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::int64_t parse_int(const Token& t, std::size_t line) {
  std::int64_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && t.text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, t.column, "integer out of range: '" + std::string(t.text) + "'");
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return value;
}

VertexId parse_id(const Token& t, std::size_t line) {
  if (!is_valid_vertex_id(t.text)) throw ParseError(line, t.column, "invalid vertex id '" + std::string(t.text) + "'");
  return VertexId(t.text);
}

std::string at(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

struct PendingEdge {
  VertexId a, b;
  std::size_t line, column_a, column_b;
};

struct PendingWeight {
  VertexId id;
  std::int64_t n;
  std::size_t line, column;
};

}  // namespace

DecoratedGraph parse_graph(std::string_view text) {
  PlumbingGraph g;
  std::vector<PendingEdge> edges;
  std::vector<PendingWeight> weights;
  std::set<VertexId> weighted;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& kw = tokens[0];
    auto expect_args = [&](std::size_t n) {
      if (tokens.size() != n + 1)
        throw ParseError(line_no, kw.column,
                         "'" + std::string(kw.text) + "' expects " + std::to_string(n) + " arguments, got " +
                             std::to_string(tokens.size() - 1));
    };
    if (kw.text == "vertex") {
      expect_args(2);
      VertexId id = parse_id(tokens[1], line_no);
      std::int64_t euler = parse_int(tokens[2], line_no);
      if (g.has_vertex(id))
        throw Error(ErrorCode::DuplicateVertex, at(line_no, tokens[1].column) + "duplicate vertex '" + id + "'");
      g.add_vertex(id, euler);
    } else if (kw.text == "edge") {
      expect_args(2);
      VertexId a = parse_id(tokens[1], line_no);
      VertexId b = parse_id(tokens[2], line_no);
      if (a == b) throw ParseError(line_no, tokens[2].column, "self-loop at '" + a + "'");
      edges.push_back({a, b, line_no, tokens[1].column, tokens[2].column});
    } else if (kw.text == "weight") {
      expect_args(2);
      VertexId id = parse_id(tokens[1], line_no);
      std::int64_t n = parse_int(tokens[2], line_no);
      if (n < 1)
        throw Error(ErrorCode::NonPositiveWeight,
                    at(line_no, tokens[2].column) + "orbifold weight must be >= 1, got " + std::to_string(n));
      if (!weighted.insert(id).second) throw ParseError(line_no, tokens[1].column, "duplicate weight for '" + id + "'");
      weights.push_back({id, n, line_no, tokens[1].column});
    } else {
      throw ParseError(line_no, kw.column, "unknown directive '" + std::string(kw.text) + "'");
    }
  }

  for (const auto& e : edges) {
    if (!g.has_vertex(e.a))
      throw Error(ErrorCode::UnknownVertexInEdge, at(e.line, e.column_a) + "edge refers to unknown vertex '" + e.a + "'");
    if (!g.has_vertex(e.b))
      throw Error(ErrorCode::UnknownVertexInEdge, at(e.line, e.column_b) + "edge refers to unknown vertex '" + e.b + "'");
    if (g.has_edge(e.a, e.b)) throw ParseError(e.line, e.column_a, "duplicate edge " + e.a + " " + e.b);
    g.add_edge(e.a, e.b);
  }
  DecoratedGraph dg(std::move(g));
  for (const auto& w : weights) {
    if (!dg.graph().has_vertex(w.id))
      throw Error(ErrorCode::UnknownVertex, at(w.line, w.column) + "weight on unknown vertex '" + w.id + "'");
    dg.set_weight(w.id, w.n);
  }
  return dg;
}

DecoratedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const DecoratedGraph& dg) {
  const PlumbingGraph& g = dg.graph();
  std::ostringstream out;
  for (const auto& id : g.vertex_ids()) out << "vertex " << id << ' ' << g.euler(id) << '\n';
  for (const auto& [a, b] : g.edges()) out << "edge " << a << ' ' << b << '\n';
  for (const auto& [id, n] : dg.weights()) out << "weight " << id << ' ' << n << '\n';
  return out.str();
}

}  // namespace orbsplice
