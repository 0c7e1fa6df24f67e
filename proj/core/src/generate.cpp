#include "penta/generate.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "penta/recognition.hpp"
#include "penta/structure.hpp"

namespace penta {

void validate(const CorpusSpec& spec) {
  if (spec.n_min < 0 || spec.n_min > spec.n_max) throw CorpusError("n_min must lie in [0, n_max]");
  if (spec.n_max > kMaxVertices)
    throw CorpusError("n_max " + std::to_string(spec.n_max) + " exceeds the graph capacity " +
                      std::to_string(kMaxVertices));
  if (spec.mode == CorpusMode::exhaustive && spec.n_max > kExhaustiveMaxOrder)
    throw CorpusError("exhaustive mode supports n_max <= " + std::to_string(kExhaustiveMaxOrder));
  if (spec.mode == CorpusMode::random) {
    if (spec.edge_probabilities.empty()) throw CorpusError("edge probability schedule is empty");
    for (double p : spec.edge_probabilities)
      if (!(p >= 0.0 && p <= 1.0)) throw CorpusError("edge probabilities must lie in [0, 1]");
  }
}

Answer edge_keeps_pentagraph(const Graph& g, Vertex u, Vertex v, Budget& budget) {
  if (u == v || g.adjacent(u, v)) return Answer::no;
  auto d = distances_from(g, u)[v];
  if (d >= 0 && d < 4) return Answer::no;
  if (d < 0) return Answer::yes;
  // Any new long odd hole runs through uv, so it is an even induced u-v path of length >= 6 plus uv.
  VertexSet interior = g.vertices();
  interior.erase(u);
  interior.erase(v);
  auto path = find_induced_path(g, PathQuery{u, v, interior, Parity::even, 6}, budget);
  if (path.value) return Answer::no;
  return path.complete ? Answer::yes : Answer::unknown;
}

namespace {

Graph add_vertex(const Graph& g, const VertexSet& neighbors) {
  std::vector<Edge> edges = g.edges();
  for (Vertex v : neighbors) edges.push_back({v, g.order()});
  return Graph(g.order() + 1, edges);
}

// Neighbourhoods for a new vertex that keep girth >= 5: pairwise distance >= 3.
template <class Visit>
void for_each_sparse_subset(const std::vector<std::vector<int>>& dist, int n, Visit&& visit) {
  VertexSet chosen;
  auto rec = [&](auto&& self, Vertex from) -> void {
    visit(chosen);
    for (Vertex v = from; v < n; ++v) {
      bool ok = true;
      for (Vertex w : chosen)
        if (dist[v][w] >= 0 && dist[v][w] < 3) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.insert(v);
      self(self, v + 1);
      chosen.erase(v);
    }
  };
  rec(rec, 0);
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(distances_from(g, v));
  return out;
}

// Cheap isomorphism invariant used to bucket candidates before exact tests.
std::vector<int> invariant_key(const Graph& g) {
  std::vector<std::vector<int>> profiles;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> p{g.degree(v)};
    std::vector<int> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    p.insert(p.end(), nd.begin(), nd.end());
    auto dist = distances_from(g, v);
    std::sort(dist.begin(), dist.end());
    p.push_back(-2);
    p.insert(p.end(), dist.begin(), dist.end());
    profiles.push_back(std::move(p));
  }
  std::sort(profiles.begin(), profiles.end());
  std::vector<int> key{g.order(), g.edge_count()};
  for (const auto& p : profiles) {
    key.push_back(-1);
    key.insert(key.end(), p.begin(), p.end());
  }
  return key;
}

class Generator {
 public:
  Generator(const CorpusSpec& spec, const std::function<bool(const Graph&)>& sink) : spec_(spec), sink_(sink) {}

  CorpusStats run() {
    if (spec_.mode == CorpusMode::random)
      random();
    else if (spec_.labeled)
      labeled();
    else
      unlabeled();
    return stats_;
  }

 private:
  // false once the stream must stop
  bool emit(const Graph& g) {
    if (stats_.emitted >= spec_.max_graphs) {
      stats_.truncated = true;
      return false;
    }
    ++stats_.emitted;
    if (!sink_(g)) stopped_ = true;
    return !stopped_;
  }

  // Girth >= 5 is maintained by construction; the odd-hole condition is checked here.
  Answer acceptable(const Graph& g) {
    if (!spec_.pentagraphs_only) return Answer::yes;
    Budget budget(spec_.max_steps);
    switch (recognize(g, budget).verdict) {
      case Verdict::pentagraph: return Answer::yes;
      case Verdict::not_pentagraph: return Answer::no;
      case Verdict::indeterminate: break;
    }
    return Answer::unknown;
  }

  void labeled() {
    auto rec = [&](auto&& self, const Graph& g) -> void {
      if (stopped_) return;
      if (g.order() >= spec_.n_min && !emit(g)) return;
      if (g.order() == spec_.n_max) return;
      auto dist = distance_matrix(g);
      for_each_sparse_subset(dist, g.order(), [&](const VertexSet& nbrs) {
        if (stopped_) return;
        Graph child = add_vertex(g, nbrs);
        Answer ok = acceptable(child);
        if (ok == Answer::unknown) stats_.truncated = true;
        if (ok == Answer::yes) self(self, child);
      });
    };
    rec(rec, Graph(0, {}));
  }

  void unlabeled() {
    std::vector<Graph> level{Graph(0, {})};
    for (int n = 0; n <= spec_.n_max && !stopped_; ++n) {
      if (n >= spec_.n_min)
        for (const Graph& g : level)
          if (!emit(g)) return;
      if (n == spec_.n_max) break;
      std::vector<Graph> next;
      std::map<std::vector<int>, std::vector<std::size_t>> buckets;
      for (const Graph& parent : level) {
        auto dist = distance_matrix(parent);
        for_each_sparse_subset(dist, n, [&](const VertexSet& nbrs) {
          Graph child = add_vertex(parent, nbrs);
          auto& bucket = buckets[invariant_key(child)];
          for (std::size_t idx : bucket)
            if (isomorphism(next[idx], child)) return;
          Answer ok = acceptable(child);
          if (ok == Answer::unknown) stats_.truncated = true;
          if (ok != Answer::yes) return;
          bucket.push_back(next.size());
          next.push_back(std::move(child));
        });
      }
      level = std::move(next);
    }
  }

  void random() {
    std::mt19937_64 rng(spec_.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t i = 0; i < spec_.target_count && !stopped_; ++i) {
      std::uniform_int_distribution<int> order(spec_.n_min, spec_.n_max);
      const int n = order(rng);
      const double p = spec_.edge_probabilities[i % spec_.edge_probabilities.size()];
      std::vector<Edge> pairs;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
      std::shuffle(pairs.begin(), pairs.end(), rng);
      std::vector<Edge> edges;
      Graph g(n, {});
      for (const Edge& e : pairs) {
        if (coin(rng) >= p) continue;
        Budget budget(spec_.max_steps);
        Answer ok = edge_keeps_pentagraph(g, e.u, e.v, budget);
        if (ok != Answer::yes) continue;
        edges.push_back(e);
        g = Graph(n, edges);
      }
      if (!emit(g)) return;
    }
  }

  const CorpusSpec& spec_;
  const std::function<bool(const Graph&)>& sink_;
  CorpusStats stats_;
  bool stopped_ = false;
};

}  // namespace

CorpusStats generate_corpus(const CorpusSpec& spec, const std::function<bool(const Graph&)>& sink) {
  validate(spec);
  return Generator(spec, sink).run();
}

std::vector<Graph> collect_corpus(const CorpusSpec& spec) {
  std::vector<Graph> out;
  generate_corpus(spec, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace penta
