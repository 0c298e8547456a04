#include "monalg/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "monalg/errors.hpp"

namespace monalg {

namespace {

struct Token {
  std::int64_t value;
  std::size_t column;
};

// Splits text into lines of non-negative integer tokens, skipping blanks and comments.
std::vector<std::pair<std::size_t, std::vector<Token>>> tokenize(const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      const unsigned char c = static_cast<unsigned char>(line[i]);
      if (std::isspace(c)) {
        ++i;
        continue;
      }
      if (c == '#') break;
      if (!std::isdigit(c)) throw ParseError(std::string("unexpected character '") + line[i] + "'", number, i + 1);
      const std::size_t start = i;
      std::int64_t v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        const int digit = line[i] - '0';
        if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
          throw ParseError("integer too large", number, start + 1);
        v = v * 10 + digit;
        ++i;
      }
      if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
        throw ParseError(std::string("unexpected character '") + line[i] + "'", number, i + 1);
      tokens.push_back({v, start + 1});
    }
    if (!tokens.empty()) lines.emplace_back(number, std::move(tokens));
  }
  return lines;
}

}  // namespace

std::vector<ExponentVector> parse_exponent_rows(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("no generators", 1, 1);
  const std::size_t s = lines.front().second.size();
  std::vector<ExponentVector> rows;
  for (const auto& [number, tokens] : lines) {
    if (tokens.size() != s) {
      const std::size_t col = tokens.size() > s ? tokens[s].column : tokens.back().column;
      throw ParseError("expected " + std::to_string(s) + " exponents, found " + std::to_string(tokens.size()),
                       number, col);
    }
    std::vector<ExponentVector::value_type> e;
    for (const auto& t : tokens) e.push_back(t.value);
    rows.emplace_back(std::move(e));
  }
  return rows;
}

MonomialIdeal parse_ideal(const std::string& text) {
  auto rows = parse_exponent_rows(text);
  auto lines = tokenize(text);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].is_zero()) throw ParseError("zero exponent vector gives the unit ideal", lines[i].first, 1);
  return MonomialIdeal::from_generators(std::move(rows));
}

Graph parse_graph(const std::string& text, bool allow_loops) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("missing vertex count", 1, 1);
  const auto& head = lines.front();
  if (head.second.size() != 1) throw ParseError("first line must hold the vertex count", head.first, 1);
  const auto s = head.second.front().value;
  if (s < 1 || s > static_cast<std::int64_t>(Clutter::max_vertices))
    throw ParseError("vertex count out of range", head.first, head.second.front().column);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, tokens] = lines[i];
    if (tokens.size() != 2) throw ParseError("an edge needs two vertices", number, tokens.front().column);
    for (const auto& t : tokens)
      if (t.value < 1 || t.value > s) throw ParseError("vertex out of range 1..s", number, t.column);
    const auto u = static_cast<std::size_t>(tokens[0].value - 1), v = static_cast<std::size_t>(tokens[1].value - 1);
    if (u == v && !allow_loops) throw ParseError("loops need multigraph mode", number, tokens[1].column);
    for (const auto& [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) throw ParseError("duplicate edge", number, tokens[0].column);
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<std::size_t>(s), edges, allow_loops);
}

PointSet parse_point_set(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("missing header \"q s\"", 1, 1);
  const auto& head = lines.front();
  if (head.second.size() != 2) throw ParseError("header must be \"q s\"", head.first, 1);
  const auto q = head.second[0].value, s = head.second[1].value;
  if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7 && q != 8 && q != 9)
    throw ParseError("field order must be one of 2, 3, 4, 5, 7, 8, 9", head.first, head.second[0].column);
  if (s < 1 || s > 16) throw ParseError("coordinate count out of range", head.first, head.second[1].column);
  std::vector<FqVector> pts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, tokens] = lines[i];
    if (tokens.size() != static_cast<std::size_t>(s))
      throw ParseError("expected " + std::to_string(s) + " coordinates", number, tokens.front().column);
    FqVector p;
    bool nonzero = false;
    for (const auto& t : tokens) {
      if (t.value >= q) throw ParseError("coordinate outside 0..q-1", number, t.column);
      p.push_back(static_cast<int>(t.value));
      nonzero = nonzero || t.value != 0;
    }
    if (!nonzero) throw ParseError("the zero vector is not a projective point", number, tokens.front().column);
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw ParseError("no points", head.first, 1);
  return PointSet(static_cast<int>(q), static_cast<std::size_t>(s), std::move(pts));
}

std::string graph_to_text(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string point_set_to_text(const PointSet& x) {
  std::string out = std::to_string(x.field().order()) + " " + std::to_string(x.num_vars()) + "\n";
  for (const auto& p : x.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace monalg
