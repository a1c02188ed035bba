#include "toughspec/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace toughspec {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<long long> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError(lineno, "expected an integer in \"" + std::string(line) + "\"");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t cursor = 0;
  while (cursor < lines.size() && blank(lines[cursor])) ++cursor;
  if (cursor == lines.size()) throw ParseError(1, "missing \"n m\" header");

  auto header = parse_ints(lines[cursor], cursor + 1);
  if (header.size() != 2) throw ParseError(cursor + 1, "header must be \"n m\"");
  const long long n = header[0], m = header[1];
  if (n < 0 || m < 0) throw ParseError(cursor + 1, "negative count in header");
  if (n > 1'000'000) throw ParseError(cursor + 1, "vertex count too large");

  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  ++cursor;
  for (long long k = 0; k < m; ++k, ++cursor) {
    if (cursor >= lines.size() || blank(lines[cursor]))
      throw ParseError(cursor + 1, "expected " + std::to_string(m) + " edges, found " +
                                       std::to_string(k));
    auto uv = parse_ints(lines[cursor], cursor + 1);
    if (uv.size() != 2) throw ParseError(cursor + 1, "edge line must be \"u v\"");
    auto u = uv[0], v = uv[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(cursor + 1, "vertex index out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(cursor + 1, "self-loop at vertex " + std::to_string(u));
    auto& nu = seen[static_cast<std::size_t>(u)];
    if (std::find(nu.begin(), nu.end(), static_cast<Vertex>(v)) != nu.end())
      throw ParseError(cursor + 1, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    nu.push_back(static_cast<Vertex>(v));
    seen[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  for (; cursor < lines.size(); ++cursor)
    if (!blank(lines[cursor])) throw ParseError(cursor + 1, "unexpected content after edges");
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos)
    throw ParseError(2, "graph6 input holds more than one graph");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError(1, "graph6 byte outside printable range 63..126");
  if (text.empty()) throw ParseError(1, "empty graph6 string");

  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw ParseError(1, "truncated graph6 size field");
    long long v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | (text[pos++] - 63);
    return v;
  };
  long long n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > 1'000'000) throw ParseError(1, "vertex count too large");

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError(1, "graph6 body has " + std::to_string(text.size() - pos) +
                            " bytes, expected " + std::to_string(bytes));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (; k < bytes * 6; ++k)
    if (((text[pos + k / 6] - 63) >> (5 - k % 6)) & 1)
      throw ParseError(1, "nonzero graph6 padding bits");
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size());
  for (auto [u, v] : g.edges()) out += "\n" + std::to_string(u) + " " + std::to_string(v);
  return out;
}

std::string serialize_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  try {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
  } catch (const GraphError& e) {
    throw ParseError(1, e.what());
  }
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? serialize_edge_list(g) : serialize_graph6(g);
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw std::invalid_argument("unknown graph format \"" + std::string(name) + "\"");
}

}  // namespace toughspec
