#pragma once

#include <vector>

#include "penta/fixtures.hpp"
#include "penta/generate.hpp"
#include "penta/graph.hpp"

namespace support {

using penta::Graph;
using penta::Vertex;

/// Vertex id of 1-based label k.
constexpr Vertex L(int k) { return k - 1; }

/// Builds a graph from 1-based edge labels.
Graph from_labels(int n, std::initializer_list<std::pair<int, int>> edges);

/// Two 5-cycles sharing the induced path 0-1-2; 7 vertices.
Graph pentagon_book();

/// Two 5-cycles sharing vertex 0.
Graph pentagons_at_vertex();

/// Unlabelled pentagraphs on 1..n_max vertices.
std::vector<Graph> exhaustive_pentagraphs(int n_max);

/// Seeded random pentagraphs.
std::vector<Graph> random_pentagraphs(std::size_t count, int n_min, int n_max, std::uint64_t seed);

/// Largest induced subgraph with minimum degree at least three (possibly empty).
Graph three_core(const Graph& g);

/// Seeded sample of vertex subsets, each vertex kept with probability 0.6.
std::vector<penta::VertexSet> sample_subsets(const Graph& g, std::size_t count, std::uint64_t seed);

}  // namespace support
