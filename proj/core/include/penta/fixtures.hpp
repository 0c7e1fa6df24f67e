#pragma once

#include <string_view>
#include <vector>

#include "penta/graph.hpp"

namespace penta {

/// Petersen graph. Vertex i here is v(i+1) of the usual drawing: outer cycle
/// v1..v5, inner edges v6v8 v7v9 v8v10 v9v6 v10v7, spokes v(i)v(i+5).
Graph petersen();
/// Petersen minus an edge: 8-cycle 1..8, chords 2-6 and 4-8, vertex 9 on {1,5}, vertex 10 on {3,7}.
Graph petersen_minus_edge();
/// Petersen minus a vertex: hexagon 1..6, 7 on {1,4}, 8 on {2,5}, 9 on {3,6}.
Graph petersen_minus_vertex();
/// Petersen minus two adjacent vertices: 8-cycle 1..8 with chords 2-6 and 4-8.
Graph petersen_minus_adjacent_pair();
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Named fixture: petersen, p0, p1, p2, c5, c7. Throws GraphError for unknown names.
Graph fixture(std::string_view name);
std::vector<std::string_view> fixture_names();

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace penta
