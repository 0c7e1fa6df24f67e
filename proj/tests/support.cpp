#include "support.hpp"

#include <random>

namespace support {

Graph from_labels(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<penta::Edge> out;
  for (auto [a, b] : edges) out.push_back({L(a), L(b)});
  return Graph(n, out);
}

Graph pentagon_book() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}, {5, 6}, {6, 0}});
}

Graph pentagons_at_vertex() {
  return Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
}

std::vector<Graph> exhaustive_pentagraphs(int n_max) {
  penta::CorpusSpec spec;
  spec.n_min = 1;
  spec.n_max = n_max;
  return penta::collect_corpus(spec);
}

std::vector<Graph> random_pentagraphs(std::size_t count, int n_min, int n_max, std::uint64_t seed) {
  penta::CorpusSpec spec;
  spec.mode = penta::CorpusMode::random;
  spec.n_min = n_min;
  spec.n_max = n_max;
  spec.seed = seed;
  spec.target_count = count;
  return penta::collect_corpus(spec);
}

Graph three_core(const Graph& g) {
  penta::VertexSet keep = g.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : keep)
      if ((g.neighbors(v) & keep).size() < 3) {
        keep.erase(v);
        changed = true;
      }
  }
  return penta::induced_subgraph(g, keep).graph;
}

std::vector<penta::VertexSet> sample_subsets(const Graph& g, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(0.6);
  std::vector<penta::VertexSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    penta::VertexSet s;
    for (Vertex v = 0; v < g.order(); ++v)
      if (keep(rng)) s.insert(v);
    out.push_back(s);
  }
  return out;
}

}  // namespace support
