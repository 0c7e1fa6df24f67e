#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "penta/vertex_set.hpp"

namespace penta {

/// Raised when a graph cannot be built from the given data.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on out-of-range endpoints, self-loops or n beyond kMaxVertices.
  /// Repeated edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  /// Closed neighbourhood of a set.
  VertexSet closed_neighborhood(const VertexSet& s) const;
  /// Vertices outside s with a neighbour in s.
  VertexSet neighborhood(const VertexSet& s) const { return closed_neighborhood(s) - s; }
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// G[keep] together with the relabeling between host and subgraph ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // subgraph id -> host id
  std::vector<Vertex> from_parent;  // host id -> subgraph id, or -1

  VertexSet lift(const VertexSet& s) const;
  /// Members of s that survive in the subgraph, in subgraph ids.
  VertexSet restrict(const VertexSet& s) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components of G[within], ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

/// Vertices reachable from `from` inside G[within] (from itself included when inside).
VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& within);

struct Layering {
  Vertex source = 0;
  std::vector<VertexSet> layers;

  /// Layer index of v, or -1 when v is outside the source's component.
  int layer_of(Vertex v) const;
};

Layering bfs_layers(const Graph& g, Vertex source);

/// BFS distances from source inside G[within]; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source, const VertexSet& within);
inline std::vector<int> distances_from(const Graph& g, Vertex source) {
  return distances_from(g, source, g.vertices());
}

/// Length of a shortest u-v path, nullopt when disconnected.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> side;             // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;     // closed odd cycle (first vertex not repeated) otherwise
};

BipartiteCheck check_bipartite(const Graph& g);

/// Girth, nullopt for forests.
std::optional<int> girth(const Graph& g);

/// A shortest cycle as a vertex sequence (empty for forests). The result is chordless.
std::vector<Vertex> shortest_cycle(const Graph& g);

}  // namespace penta
