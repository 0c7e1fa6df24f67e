#include "penta/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace penta {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxVertices) + "]");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for n=" +
                       std::to_string(n));
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (!adj_[e.u].contains(e.v)) ++m_;
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
  }
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out = s;
  for (Vertex v : s) out |= adj_[v];
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
  VertexSet out;
  for (Vertex v : s) out.insert(to_parent[v]);
  return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& s) const {
  VertexSet out;
  for (Vertex v : s)
    if (v < static_cast<int>(from_parent.size()) && from_parent[v] >= 0) out.insert(from_parent[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : keep)
    for (Vertex w : g.neighbors(v) & keep)
      if (v < w) edges.push_back({sub.from_parent[v], sub.from_parent[w]});
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& within) {
  VertexSet seen = from & within;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = reachable(g, VertexSet{rest.first()}, rest);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

int Layering::layer_of(Vertex v) const {
  for (std::size_t k = 0; k < layers.size(); ++k)
    if (layers[k].contains(v)) return static_cast<int>(k);
  return -1;
}

Layering bfs_layers(const Graph& g, Vertex source) {
  Layering out;
  out.source = source;
  VertexSet seen{source};
  VertexSet frontier{source};
  while (!frontier.empty()) {
    out.layers.push_back(frontier);
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return out;
}

std::vector<int> distances_from(const Graph& g, Vertex source, const VertexSet& within) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (!within.contains(source)) return dist;
  dist[source] = 0;
  VertexSet seen{source};
  VertexSet frontier{source};
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    for (Vertex v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  int d = distances_from(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

BipartiteCheck check_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteCheck out;
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          parent[w] = u;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // Same BFS depth; climb to the common ancestor for an odd cycle.
          std::vector<Vertex> left{u}, right{w};
          while (left.back() != right.back()) {
            left.push_back(parent[left.back()]);
            right.push_back(parent[right.back()]);
          }
          right.pop_back();
          out.odd_cycle.assign(left.rbegin(), left.rend());
          out.odd_cycle.insert(out.odd_cycle.end(), right.begin(), right.end());
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  out.side = std::move(side);
  return out;
}

namespace {

// Shortest cycle through edge uv: BFS from u to v avoiding that edge.
std::vector<Vertex> shortest_cycle_through(const Graph& g, Vertex u, Vertex v, int bound) {
  const int n = g.order();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[u] = 0;
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] + 1 >= bound) break;
    for (Vertex y : g.neighbors(x)) {
      if (x == u && y == v) continue;
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      parent[y] = x;
      if (y == v) {
        std::vector<Vertex> cycle;
        for (Vertex z = v; z != -1; z = parent[z]) cycle.push_back(z);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      queue.push_back(y);
    }
  }
  return {};
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<Vertex> shortest_cycle(const Graph& g) {
  auto length = girth(g);
  if (!length) return {};
  for (const Edge& e : g.edges()) {
    auto cycle = shortest_cycle_through(g, e.u, e.v, *length);
    if (static_cast<int>(cycle.size()) == *length) return cycle;
  }
  return {};
}

}  // namespace penta
