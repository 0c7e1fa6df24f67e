#include "penta/coloring.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "penta/fixtures.hpp"

namespace penta {

int Coloring::used() const {
  std::vector<int> seen;
  for (int col : colors)
    if (std::find(seen.begin(), seen.end(), col) == seen.end()) seen.push_back(col);
  return static_cast<int>(seen.size());
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order())
    throw ContractError("colouring covers " + std::to_string(c.colors.size()) + " of " + std::to_string(g.order()) +
                        " vertices");
  for (Vertex v = 0; v < g.order(); ++v)
    if (c.colors[v] < 1 || c.colors[v] > c.palette)
      throw ContractError("vertex " + std::to_string(v) + " has colour " + std::to_string(c.colors[v]) +
                          " outside 1.." + std::to_string(c.palette));
  for (const Edge& e : g.edges())
    if (c.colors[e.u] == c.colors[e.v]) return false;
  return true;
}

Coloring four_color(const Graph& g) {
  Coloring out{4, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  for (const VertexSet& comp : components(g)) {
    const Layering layering = bfs_layers(g, comp.first());
    for (std::size_t k = 0; k < layering.layers.size(); ++k) {
      const InducedSubgraph layer = induced_subgraph(g, layering.layers[k]);
      const BipartiteCheck check = check_bipartite(layer.graph);
      if (!check.bipartite) {
        std::vector<Vertex> cycle;
        for (Vertex v : check.odd_cycle) cycle.push_back(layer.to_parent[v]);
        throw LayerError(static_cast<int>(k), std::move(cycle));
      }
      const int base = k % 2 == 0 ? 1 : 3;
      for (std::size_t i = 0; i < layer.to_parent.size(); ++i) out.colors[layer.to_parent[i]] = base + check.side[i];
    }
  }
  if (!verify_coloring(g, out)) throw ColoringError("four-colouring is improper", {});
  return out;
}

KempeComponent kempe_component(const Graph& g, const Coloring& c, int a, int b, Vertex v) {
  VertexSet pair;
  for (Vertex u = 0; u < g.order(); ++u)
    if (c.colors[u] == a || c.colors[u] == b) pair.insert(u);
  if (!pair.contains(v)) throw ContractError("kempe_component: vertex colour is not in the pair");
  return {{std::min(a, b), std::max(a, b)}, reachable(g, VertexSet{v}, pair)};
}

Coloring kempe_swap(const Graph& g, const Coloring& c, int a, int b, Vertex v) {
  Coloring out = c;
  for (Vertex u : kempe_component(g, c, a, b, v).vertices) out.colors[u] = c.colors[u] == a ? b : a;
  return out;
}

Coloring permute_palette(const Coloring& c, std::span<const std::pair<Vertex, int>> fixed) {
  std::vector<int> image(static_cast<std::size_t>(c.palette) + 1, 0);
  std::vector<bool> taken(static_cast<std::size_t>(c.palette) + 1, false);
  for (auto [v, col] : fixed) {
    const int from = c.colors[v];
    if (image[from] != 0 && image[from] != col) throw ContractError("permute_palette: conflicting targets");
    if (image[from] == 0 && taken[col]) throw ContractError("permute_palette: target colour used twice");
    image[from] = col;
    taken[col] = true;
  }
  int next = 1;
  for (int from = 1; from <= c.palette; ++from) {
    if (image[from] != 0) continue;
    while (taken[next]) ++next;
    image[from] = next;
    taken[next] = true;
  }
  Coloring out = c;
  for (int& col : out.colors) col = image[col];
  return out;
}

namespace {

// Shortest path inside `within` from any vertex of `from` to any vertex of `to`.
std::vector<Vertex> shortest_path_between(const Graph& g, const VertexSet& from, const VertexSet& to,
                                          const VertexSet& within) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = from & within;
  std::deque<Vertex> queue;
  for (Vertex v : seen) queue.push_back(v);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (to.contains(u)) {
      std::vector<Vertex> path;
      for (Vertex w = u; w != -1; w = parent[w]) path.push_back(w);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.neighbors(u) & within) {
      if (seen.contains(w)) continue;
      seen.insert(w);
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return {};
}

void check_side_coloring(const Graph& side, const Coloring& c) {
  if (c.palette != 3 || !verify_coloring(side, c)) throw ContractError("side colouring is not a proper 3-colouring");
}

}  // namespace

Coloring combine_p3(const Graph& g, const P3Cutset& cut, const std::vector<Coloring>& side_colorings) {
  if (cut.sides.size() < 2) throw ContractError("combine_p3: a P3-cutset needs at least two sides");
  if (side_colorings.size() != cut.sides.size()) throw ContractError("combine_p3: one colouring per side expected");
  const auto [v1, v2, v3] = cut.path;
  const VertexSet path = VertexSet::of(cut.path);

  struct Side {
    InducedSubgraph sub;
    Coloring coloring;
  };
  std::vector<Side> sides;
  for (std::size_t i = 0; i < cut.sides.size(); ++i) {
    Side s{induced_subgraph(g, cut.sides[i] | path), {}};
    check_side_coloring(s.sub.graph, side_colorings[i]);
    const std::array<std::pair<Vertex, int>, 2> fixed{
        {{s.sub.from_parent[v1], 1}, {s.sub.from_parent[v2], 2}}};
    s.coloring = permute_palette(side_colorings[i], fixed);
    sides.push_back(std::move(s));
  }

  // Sides whose v3 has colour 1, and those where it has colour 3.
  std::array<std::vector<std::size_t>, 2> groups;
  for (std::size_t i = 0; i < sides.size(); ++i)
    groups[sides[i].coloring[sides[i].sub.from_parent[v3]] == 1 ? 0 : 1].push_back(i);

  if (!groups[0].empty() && !groups[1].empty()) {
    std::array<std::vector<Vertex>, 2> blocking;
    bool merged = false;
    for (int which : {1, 0}) {
      bool free = true;
      for (std::size_t i : groups[which]) {
        const Side& s = sides[i];
        const Vertex a = s.sub.from_parent[v1], c = s.sub.from_parent[v3];
        const KempeComponent comp = kempe_component(s.sub.graph, s.coloring, 1, 3, c);
        if (comp.vertices.contains(a)) {
          for (Vertex w : shortest_path_between(s.sub.graph, VertexSet{a}, VertexSet{c}, comp.vertices))
            blocking[which].push_back(s.sub.to_parent[w]);
          free = false;
          break;
        }
      }
      if (!free) continue;
      for (std::size_t i : groups[which]) {
        Side& s = sides[i];
        s.coloring = kempe_swap(s.sub.graph, s.coloring, 1, 3, s.sub.from_parent[v3]);
      }
      merged = true;
      break;
    }
    if (!merged) {
      // Even v1-v3 path on one side, odd on the other: together an odd hole.
      std::vector<Vertex> cycle = blocking[0];
      for (auto it = blocking[1].rbegin() + 1; it + 1 != blocking[1].rend(); ++it) cycle.push_back(*it);
      throw ColoringError("P3 sides cannot agree on v3: odd hole through the cutset", std::move(cycle));
    }
  }

  Coloring out{3, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  for (const Side& s : sides)
    for (std::size_t i = 0; i < s.sub.to_parent.size(); ++i) out.colors[s.sub.to_parent[i]] = s.coloring.colors[i];
  return out;
}

NormalizedColoring normalize_on_star(const Graph& gi, const Coloring& c, Vertex v, const VertexSet& x) {
  if (x.contains(v) || !x.is_subset_of(gi.neighbors(v)))
    throw ContractError("normalize_on_star: centre must be adjacent to every leaf");
  check_side_coloring(gi, c);
  const std::array<std::pair<Vertex, int>, 1> fixed{{{v, 1}}};
  NormalizedColoring out{permute_palette(c, fixed), 0};
  auto coloured = [&](int col) {
    VertexSet s;
    for (Vertex u : x)
      if (out.coloring[u] == col) s.insert(u);
    return s;
  };
  for (VertexSet threes = coloured(3); !threes.empty(); threes = coloured(3)) {
    const KempeComponent comp = kempe_component(gi, out.coloring, 2, 3, threes.first());
    const VertexSet twos = coloured(2) & comp.vertices;
    if (!twos.empty())
      throw ColoringError("leaves of both colours share a {2,3}-component",
                          shortest_path_between(gi, threes & comp.vertices, twos, comp.vertices));
    out.coloring = kempe_swap(gi, out.coloring, 2, 3, threes.first());
    ++out.passes;
    if (coloured(3).size() >= threes.size() || out.passes > x.size())
      throw ColoringError("star normalisation did not converge", x.to_vector());
  }
  return out;
}

const std::array<int, 10>& petersen_base_coloring() {
  static const std::array<int, 10> base{1, 2, 1, 2, 3, 2, 1, 3, 3, 2};
  return base;
}

namespace {

class ThreeColorer {
 public:
  ThreeColorer(Budget& budget, int depth_limit) : budget_(budget), depth_limit_(depth_limit) {}

  Coloring color(const Graph& g, int depth) {
    if (depth > depth_limit_) throw DecompositionFailure("recursion deeper than the vertex count", false);
    Coloring out{3, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    if (g.order() == 0) return out;

    const auto comps = components(g);
    if (comps.size() > 1) {
      for (const VertexSet& comp : comps) paste(out, color_part(g, comp, depth), comp);
      return out;
    }

    const DecompositionOutcome outcome = decompose(g, budget_);
    std::visit([&](const auto& cert) { apply(g, cert, depth, out); }, outcome.certificate);
    if (!verify_coloring(g, out)) throw ColoringError("three-colouring is improper", {});
    return out;
  }

 private:
  struct Part {
    InducedSubgraph sub;
    Coloring coloring;
  };

  Part color_part(const Graph& g, const VertexSet& keep, int depth) {
    Part p{induced_subgraph(g, keep), {}};
    p.coloring = color(p.sub.graph, depth + 1);
    return p;
  }

  static void paste(Coloring& out, const Part& p, const VertexSet&) {
    for (std::size_t i = 0; i < p.sub.to_parent.size(); ++i) out.colors[p.sub.to_parent[i]] = p.coloring.colors[i];
  }

  void apply(const Graph&, const BipartiteCertificate& cert, int, Coloring& out) {
    for (std::size_t v = 0; v < cert.side.size(); ++v) out.colors[v] = cert.side[v] + 1;
  }

  void apply(const Graph&, const PetersenCertificate& cert, int, Coloring& out) {
    for (std::size_t i = 0; i < cert.embedding.size(); ++i) out.colors[cert.embedding[i]] = petersen_base_coloring()[i];
  }

  void apply(const Graph& g, const LowDegreeCertificate& cert, int depth, Coloring& out) {
    VertexSet rest = g.vertices();
    rest.erase(cert.vertex);
    paste(out, color_part(g, rest, depth), rest);
    std::array<bool, 4> blocked{};
    for (Vertex w : g.neighbors(cert.vertex)) blocked[out.colors[w]] = true;
    int col = 1;
    while (blocked[col]) ++col;
    out.colors[cert.vertex] = col;
  }

  void apply(const Graph& g, const CliqueCutset& cert, int depth, Coloring& out) {
    const auto members = cert.clique.to_vector();
    for (const VertexSet& side : cert.sides) {
      Part p = color_part(g, side | cert.clique, depth);
      std::vector<std::pair<Vertex, int>> fixed;
      for (std::size_t k = 0; k < members.size(); ++k)
        fixed.emplace_back(p.sub.from_parent[members[k]], static_cast<int>(k) + 1);
      p.coloring = permute_palette(p.coloring, fixed);
      paste(out, p, side);
    }
  }

  void apply(const Graph& g, const P3Cutset& cert, int depth, Coloring& out) {
    const VertexSet path = VertexSet::of(cert.path);
    std::vector<Coloring> sides;
    for (const VertexSet& side : cert.sides) sides.push_back(color_part(g, side | path, depth).coloring);
    out = combine_p3(g, cert, sides);
  }

  void apply(const Graph& g, const ParityStarCutset& cert, int depth, Coloring& out) {
    for (const VertexSet& side : cert.components) {
      Part p = color_part(g, side | cert.cutset(), depth);
      p.coloring =
          normalize_on_star(p.sub.graph, p.coloring, p.sub.from_parent[cert.center], p.sub.restrict(cert.leaves))
              .coloring;
      paste(out, p, side);
    }
  }

  void apply(const Graph&, const NoneFound& cert, int, Coloring&) {
    throw DecompositionFailure(cert.budget_exhausted ? "decomposition search ran out of budget"
                                                     : "no decomposition found; input is not a pentagraph",
                               cert.budget_exhausted);
  }

  Budget& budget_;
  int depth_limit_;
};

}  // namespace

Coloring three_color(const Graph& g, Budget& budget) {
  return ThreeColorer(budget, g.order() + 1).color(g, 0);
}

Coloring three_color(const Graph& g) {
  Budget budget;
  return three_color(g, budget);
}

namespace {

bool extend_coloring(const Graph& g, const std::vector<Vertex>& order, std::size_t at, int k, int max_used,
                     std::vector<int>& colors) {
  if (at == order.size()) return true;
  const Vertex v = order[at];
  const int limit = std::min(k, max_used + 1);
  for (int col = 1; col <= limit; ++col) {
    bool clash = false;
    for (Vertex w : g.neighbors(v))
      if (colors[w] == col) {
        clash = true;
        break;
      }
    if (clash) continue;
    colors[v] = col;
    if (extend_coloring(g, order, at + 1, k, std::max(max_used, col), colors)) return true;
  }
  colors[v] = 0;
  return false;
}

}  // namespace

std::optional<int> chromatic_number_bruteforce(const Graph& g, int k_max) {
  if (g.order() == 0) return 0;
  // Visit each component breadth-first so every vertex after the first has a coloured neighbour.
  std::vector<Vertex> order;
  for (const VertexSet& comp : components(g))
    for (const VertexSet& layer : bfs_layers(g, comp.first()).layers)
      for (Vertex v : layer) order.push_back(v);
  for (int k = 1; k <= k_max; ++k) {
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
    if (extend_coloring(g, order, 0, k, 0, colors)) return k;
  }
  return std::nullopt;
}

}  // namespace penta
