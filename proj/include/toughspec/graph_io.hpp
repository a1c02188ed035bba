#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "toughspec/graph.hpp"

namespace toughspec {

enum class GraphFormat { EdgeList, Graph6 };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// EDGE_LIST: header "n m" followed by m lines "u v" with 0-based endpoints.
/// Graph6: the standard header-less encoding; a leading ">>graph6<<" is
/// tolerated.
Graph parse_graph(std::string_view text, GraphFormat format);

/// EDGE_LIST output lists edges with u < v in lexicographic order, joined by
/// LF with no trailing newline.
std::string serialize_graph(const Graph& g, GraphFormat format);

GraphFormat parse_format_name(std::string_view name);

}  // namespace toughspec
