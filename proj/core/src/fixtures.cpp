#include "penta/fixtures.hpp"

#include <string>

namespace penta {

namespace {

// Edge lists below use the 1-based labels of the drawings.
Graph from_labels(int n, std::initializer_list<Edge> labelled) {
  std::vector<Edge> edges;
  for (const Edge& e : labelled) edges.push_back({e.u - 1, e.v - 1});
  return Graph(n, edges);
}

}  // namespace

Graph petersen() {
  return from_labels(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 8}, {7, 9}, {8, 10}, {9, 6}, {10, 7},
                          {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
}

Graph petersen_minus_edge() {
  return from_labels(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}, {2, 6}, {4, 8},
                          {1, 9}, {9, 5}, {3, 10}, {10, 7}});
}

Graph petersen_minus_vertex() {
  return from_labels(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {7, 1}, {7, 4}, {8, 2}, {8, 5},
                         {9, 3}, {9, 6}});
}

Graph petersen_minus_adjacent_pair() {
  return from_labels(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}, {2, 6}, {4, 8}});
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph fixture(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "p0") return petersen_minus_edge();
  if (name == "p1") return petersen_minus_vertex();
  if (name == "p2") return petersen_minus_adjacent_pair();
  if (name == "c5") return cycle_graph(5);
  if (name == "c7") return cycle_graph(7);
  throw GraphError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string_view> fixture_names() { return {"petersen", "p0", "p1", "p2", "c5", "c7"}; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), edges);
}

}  // namespace penta
