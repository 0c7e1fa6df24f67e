#pragma once

// Slow, independent reference implementations used to check the library.
// They share nothing with the library beyond the Graph container.

#include <optional>
#include <vector>

#include "penta/graph.hpp"

namespace oracle {

using penta::Graph;
using penta::Vertex;

/// Vertex sets (as bit masks) of every induced cycle, found by testing each
/// subset for being connected and 2-regular.
std::vector<unsigned> induced_cycle_sets(const Graph& g);

/// Girth from the induced cycles: a shortest cycle is always induced.
std::optional<int> girth_from_cycles(const Graph& g);

/// Girth by removing each edge and measuring the distance between its ends.
std::optional<int> girth_by_edge_removal(const Graph& g);

bool is_pentagraph(const Graph& g);
bool has_long_odd_hole(const Graph& g);

/// All-pairs distances; -1 for unreachable.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

/// Tries all 2^n assignments.
bool two_colorable(const Graph& g);

/// Every simple s-t path with interior in `interior` that happens to be induced.
std::vector<std::vector<Vertex>> induced_paths(const Graph& g, Vertex s, Vertex t, const std::vector<bool>& interior);

bool linked(const Graph& g, Vertex s, Vertex t);
bool odd_linked(const Graph& g, Vertex s, Vertex t);

/// Tries every injection of pattern vertices into g.
bool contains_induced(const Graph& g, const Graph& pattern);
bool isomorphic(const Graph& a, const Graph& b);

/// Least k with a proper k-colouring, by trying all k^n assignments.
int chromatic_number(const Graph& g);

/// Number of connected components of g minus `removed`.
int component_count(const Graph& g, const std::vector<bool>& removed);

/// Some parity star-cutset (strong when requested) with centre x and leaves in N(x).
bool has_parity_star_cutset(const Graph& g, bool strong);

/// Some induced three-vertex path whose removal disconnects g.
bool has_p3_cutset(const Graph& g);

/// One representative per isomorphism class of graphs on n vertices, from all edge subsets.
std::vector<Graph> isomorphism_classes(int n);

}  // namespace oracle
