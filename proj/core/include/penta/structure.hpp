#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "penta/graph.hpp"
#include "penta/search.hpp"

namespace penta {

/// Induced path p0-p1-...-pk; length is the number of edges.
struct InducedPath {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  VertexSet interior() const;
  friend auto operator<=>(const InducedPath&, const InducedPath&) = default;
};

/// Induced cycle, listed in cyclic order without repeating the first vertex.
/// A hole proper has length at least four; shortest_odd_cycle may also hand back a triangle.
struct Hole {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
  friend auto operator<=>(const Hole&, const Hole&) = default;
};

bool is_induced_path(const Graph& g, std::span<const Vertex> seq);
bool is_induced_cycle(const Graph& g, std::span<const Vertex> seq);

enum class Parity { any, even, odd };

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

struct PathQuery {
  Vertex source = 0;
  Vertex target = 0;
  VertexSet interior;  // vertices the path may pass through
  Parity parity = Parity::any;
  int min_length = 1;
  int max_length = kUnbounded;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
};

/// All induced source-target paths with interior inside query.interior, in
/// lexicographic order of their vertex sequences, stopping after query.limit hits.
Searched<std::vector<InducedPath>> enumerate_induced_paths(const Graph& g, const PathQuery& query, Budget& budget);
Searched<std::vector<InducedPath>> enumerate_induced_paths(const Graph& g, const PathQuery& query);

/// Lexicographically least induced path for the query, if any.
Searched<std::optional<InducedPath>> find_induced_path(const Graph& g, PathQuery query, Budget& budget);

/// A minimum-length odd cycle; nullopt iff the graph is bipartite.
std::optional<Hole> shortest_odd_cycle(const Graph& g);

/// An induced odd cycle of length at least seven. Incomplete searches never
/// report absence: check `complete` before trusting an empty value.
Searched<std::optional<Hole>> find_long_odd_hole(const Graph& g, Budget& budget);
Searched<std::optional<Hole>> find_long_odd_hole(const Graph& g);

/// All induced 5-cycles, each starting at its minimum vertex.
std::vector<Hole> five_holes(const Graph& g);

/// Induced s-t paths of length >= 3 of both parities exist. Requires s, t nonadjacent.
Answer is_linked(const Graph& h, Vertex s, Vertex t, Budget& budget);
Answer is_linked(const Graph& h, Vertex s, Vertex t);
/// An induced s-t path of odd length >= 5 exists. Requires s, t nonadjacent.
Answer is_odd_linked(const Graph& h, Vertex s, Vertex t, Budget& budget);
Answer is_odd_linked(const Graph& h, Vertex s, Vertex t);

enum class JumpKind { short_jump, local, general };

/// Induced path between two nonadjacent vertices of a 5-hole whose interior misses the hole.
struct Jump {
  InducedPath path;
  Vertex across = -1;  // the hole vertex adjacent to both ends
  JumpKind kind = JumpKind::general;
};

/// Hole vertices other than `across` and the two jump ends.
VertexSet far_side(const Hole& pentagon, Vertex across);

/// Interior vertices allowed for a local jump across `across`.
VertexSet local_jump_interior(const Graph& g, const Hole& pentagon, Vertex across);

JumpKind classify_jump(const Graph& g, const Hole& pentagon, const InducedPath& path, Vertex across);

/// Every jump over the 5-hole, optionally only the local ones. Interiors larger
/// than max_interior are not explored; hitting that cap or the budget clears `complete`.
Searched<std::vector<Jump>> find_jumps(const Graph& g, const Hole& pentagon, bool local_only, Budget& budget,
                                       int max_interior = kUnbounded);
Searched<std::vector<Jump>> find_jumps(const Graph& g, const Hole& pentagon, bool local_only);

/// pattern vertex -> host vertex
using Embedding = std::vector<Vertex>;

/// An embedding of `pattern` as an induced subgraph of g, if one exists.
std::optional<Embedding> contains_induced(const Graph& g, const Graph& pattern);

/// An isomorphism pattern -> g, if the graphs are isomorphic.
std::optional<Embedding> isomorphism(const Graph& g, const Graph& pattern);

}  // namespace penta
