#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "penta/graph.hpp"

namespace penta {

/// Malformed textual input; `offset` is the byte position where parsing failed.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : GraphError(what + " (at byte " + std::to_string(offset) + ")"), detail_(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

enum class Format { graph6, dimacs, json };

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// "p edge n m" header followed by 1-based "e u v" lines; "c" lines are comments.
Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]} with 0-based vertices.
Graph parse_json_graph(std::string_view text);
std::string write_json_graph(const Graph& g);

/// Graphviz rendering; when colors is non-empty vertex v is filled by colors[v].
std::string write_dot(const Graph& g, std::span<const int> colors = {});

/// Every graph in a document: one per non-empty line for graph6, a single
/// graph for DIMACS, an object or an array of objects for JSON.
std::vector<Graph> read_graphs(std::string_view text, Format format);

Format parse_format(std::string_view name);

}  // namespace penta
