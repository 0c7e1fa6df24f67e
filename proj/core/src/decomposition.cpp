#include "penta/decomposition.hpp"

#include <algorithm>

#include "penta/fixtures.hpp"

namespace penta {

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::bipartite: return "bipartite";
    case OutcomeKind::petersen: return "petersen";
    case OutcomeKind::low_degree: return "low_degree";
    case OutcomeKind::clique_cut: return "clique_cut";
    case OutcomeKind::p3: return "p3";
    case OutcomeKind::star: return "star";
    case OutcomeKind::none_found: return "none_found";
  }
  return "?";
}

std::optional<Vertex> find_low_degree(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 2) return v;
  return std::nullopt;
}

std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet clique{v};
    auto sides = components(g, all - clique);
    if (sides.size() >= 2) return CliqueCutset{clique, std::move(sides)};
  }
  for (const Edge& e : g.edges()) {
    VertexSet clique{e.u, e.v};
    auto sides = components(g, all - clique);
    if (sides.size() >= 2) return CliqueCutset{clique, std::move(sides)};
  }
  return std::nullopt;
}

std::optional<P3Cutset> find_p3_cutset(const Graph& g) {
  const VertexSet all = g.vertices();
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a))
      for (Vertex c : g.neighbors(b)) {
        if (c <= a || g.adjacent(a, c)) continue;
        auto sides = components(g, all - VertexSet{a, b, c});
        if (sides.size() >= 2) return P3Cutset{{a, b, c}, std::move(sides)};
      }
  return std::nullopt;
}

namespace {

// Every pair of leaves joined by an even induced path with interior in `component`.
Answer pairs_joined_evenly(const Graph& g, const VertexSet& leaves, const VertexSet& component, Budget& budget) {
  const auto ls = leaves.to_vector();
  if (ls.size() >= 2)
    for (Vertex x : ls)
      if (!g.neighbors(x).intersects(component)) return Answer::no;
  bool unknown = false;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      auto path = find_induced_path(g, PathQuery{ls[i], ls[j], component, Parity::even, 2}, budget);
      if (path.value) continue;
      if (path.complete) return Answer::no;
      unknown = true;
    }
  return unknown ? Answer::unknown : Answer::yes;
}

}  // namespace

Searched<std::optional<ParityStarCutset>> verify_parity_star_cutset(const Graph& g, Vertex center,
                                                                    const VertexSet& leaves, Budget& budget) {
  if (center < 0 || center >= g.order() || leaves.contains(center))
    throw ContractError("verify_parity_star_cutset: invalid centre");
  if (!leaves.is_subset_of(g.neighbors(center)))
    throw ContractError("verify_parity_star_cutset: centre must be adjacent to every leaf");
  Searched<std::optional<ParityStarCutset>> out;
  ParityStarCutset cut;
  cut.center = center;
  cut.leaves = leaves;
  cut.components = components(g, g.vertices() - cut.cutset());
  if (cut.components.size() < 2) return out;
  std::optional<ParityStarCutset> weak;
  for (const VertexSet& a : cut.components) {
    Answer ok = pairs_joined_evenly(g, leaves, a, budget);
    if (ok == Answer::unknown) out.complete = false;
    if (ok != Answer::yes) continue;
    cut.witness = a;
    cut.strong = g.neighbors(center).intersects(a);
    if (cut.strong) {
      out.value = cut;
      out.complete = true;
      return out;
    }
    if (!weak) weak = cut;
  }
  // A strong witness might hide behind an undecided component.
  if (weak) out.value = weak;
  return out;
}

Searched<std::optional<ParityStarCutset>> verify_parity_star_cutset(const Graph& g, Vertex center,
                                                                    const VertexSet& leaves) {
  Budget budget;
  return verify_parity_star_cutset(g, center, leaves, budget);
}

ParityStarCutset minimize_star_cutset(const Graph& g, ParityStarCutset cut, Budget& budget) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Vertex x : cut.leaves) {
      VertexSet fewer = cut.leaves;
      fewer.erase(x);
      auto smaller = verify_parity_star_cutset(g, cut.center, fewer, budget);
      if (smaller.value && (smaller.value->strong || !cut.strong)) {
        cut = *smaller.value;
        shrunk = true;
        break;
      }
    }
  }
  return cut;
}

std::optional<ParityStarCutset> star_from_clique_cutset(const Graph& g, const CliqueCutset& cut) {
  Budget budget;
  const auto members = cut.clique.to_vector();
  for (Vertex center : members) {
    VertexSet leaves = cut.clique;
    leaves.erase(center);
    auto star = verify_parity_star_cutset(g, center, leaves, budget);
    if (star.value && star.value->strong) return star.value;
  }
  return std::nullopt;
}

namespace {

struct JumpProfile {
  // Indexed by hole position of the vertex jumped across.
  std::array<std::vector<InducedPath>, 5> short_jumps;
  std::array<bool, 5> has_local{};
  std::array<bool, 5> local_avoiding_short{};
  VertexSet short_interiors;
  bool complete = true;
};

JumpProfile profile_jumps(const Graph& g, const Hole& c, Budget& budget) {
  JumpProfile p;
  const VertexSet outside = g.vertices() - c.vertex_set();
  for (int i = 0; i < 5; ++i) {
    Vertex across = c.vertices[i];
    Vertex s = c.vertices[(i + 4) % 5];
    Vertex t = c.vertices[(i + 1) % 5];
    if (s > t) std::swap(s, t);
    auto shorts = enumerate_induced_paths(g, PathQuery{s, t, outside, Parity::any, 3, 3}, budget);
    if (!shorts.complete) p.complete = false;
    for (auto& path : shorts.value)
      if (classify_jump(g, c, path, across) == JumpKind::short_jump) {
        p.short_interiors |= path.interior();
        p.short_jumps[i].push_back(std::move(path));
      }
  }
  for (int i = 0; i < 5; ++i) {
    Vertex s = c.vertices[(i + 4) % 5];
    Vertex t = c.vertices[(i + 1) % 5];
    VertexSet local = local_jump_interior(g, c, c.vertices[i]);
    auto any = find_induced_path(g, PathQuery{s, t, local, Parity::any, 2}, budget);
    if (!any.complete) p.complete = false;
    p.has_local[i] = any.value.has_value();
    if (!p.has_local[i]) continue;
    auto avoiding = find_induced_path(g, PathQuery{s, t, local - p.short_interiors, Parity::any, 2}, budget);
    if (!avoiding.complete) p.complete = false;
    p.local_avoiding_short[i] = avoiding.value.has_value();
  }
  return p;
}

}  // namespace

PentagonOutcome decompose_at_pentagon(const Graph& g, const Hole& pentagon, Budget& budget) {
  if (pentagon.length() != 5 || !is_induced_cycle(g, pentagon.vertices))
    throw ContractError("decompose_at_pentagon: expected a hole of length five");
  PentagonOutcome out;
  for (Vertex v : pentagon.vertices)
    if (g.degree(v) <= 2) {
      out.result = LowDegreeCertificate{v};
      return out;
    }
  const JumpProfile jumps = profile_jumps(g, pentagon, budget);
  out.complete = jumps.complete;
  const VertexSet hole = pentagon.vertex_set();

  // The ten labellings of the hole as c1..c5 (positions 0..4 here).
  for (int start = 0; start < 5; ++start)
    for (int dir : {1, -1}) {
      std::array<int, 5> at{};  // hole index of c(k+1)
      for (int k = 0; k < 5; ++k) at[k] = ((start + dir * k) % 5 + 5) % 5;
      const int i1 = at[0], i2 = at[1], i3 = at[2], i4 = at[3], i5 = at[4];
      if (!jumps.short_jumps[i3].empty() || !jumps.short_jumps[i4].empty() || !jumps.short_jumps[i5].empty())
        continue;
      if (jumps.has_local[i4] || jumps.local_avoiding_short[i3] || jumps.local_avoiding_short[i5]) continue;

      std::array<Vertex, 5> c{};
      for (int k = 0; k < 5; ++k) c[k] = pentagon.vertices[at[k]];
      out.labelling = c;

      // Short jumps across c2 run c1-x1-x3-c3; those across c1 run c5-x5-x2-c2.
      VertexSet x3, x5;
      for (const auto& path : jumps.short_jumps[i2]) x3.insert(path.vertices[path.front() == c[0] ? 2 : 1]);
      for (const auto& path : jumps.short_jumps[i1]) x5.insert(path.vertices[path.front() == c[4] ? 1 : 2]);
      const VertexSet blocked = hole | jumps.short_interiors;
      const VertexSet near_c4 = g.neighbors(c[3]) - blocked;

      for (const VertexSet& d : components(g, g.vertices() - blocked)) {
        if (!d.intersects(near_c4)) continue;
        const VertexSet attached = g.neighborhood(d) & blocked;
        if (attached.is_subset_of(VertexSet{c[2], c[3], c[4]})) {
          auto sides = components(g, g.vertices() - VertexSet{c[2], c[3], c[4]});
          if (sides.size() >= 2) {
            out.result = P3Cutset{{c[2], c[3], c[4]}, std::move(sides)};
            return out;
          }
        }
        for (auto [center, wing] : {std::pair{c[2], x3}, std::pair{c[4], x5}}) {
          if (!attached.intersects(wing)) continue;
          VertexSet leaves = wing;
          leaves.insert(c[3]);
          auto star = verify_parity_star_cutset(g, center, leaves, budget);
          if (!star.complete) out.complete = false;
          if (star.value && star.value->strong) {
            out.result = minimize_star_cutset(g, *star.value, budget);
            return out;
          }
        }
      }
    }
  if (budget.exhausted()) out.complete = false;
  return out;
}

Searched<std::optional<ParityStarCutset>> search_star_cutsets(const Graph& g, Budget& budget, bool require_strong,
                                                              int max_pool) {
  Searched<std::optional<ParityStarCutset>> out;
  const VertexSet all = g.vertices();
  for (Vertex center = 0; center < g.order(); ++center) {
    const auto pool = g.neighbors(center).to_vector();
    const int k = static_cast<int>(pool.size());
    if (k > max_pool) {
      out.complete = false;
      continue;
    }
    // Subsets in increasing size, each size in lexicographic order.
    for (int size = 0; size <= k; ++size) {
      std::vector<int> pick(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        VertexSet leaves;
        for (int i : pick) leaves.insert(pool[i]);
        VertexSet cut = leaves;
        cut.insert(center);
        if (components(g, all - cut).size() >= 2) {
          auto star = verify_parity_star_cutset(g, center, leaves, budget);
          if (!star.complete) out.complete = false;
          if (star.value && (star.value->strong || !require_strong)) {
            out.value = minimize_star_cutset(g, *star.value, budget);
            out.complete = true;
            return out;
          }
        }
        int i = size - 1;
        while (i >= 0 && pick[i] == k - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (budget.exhausted()) {
        out.complete = false;
        return out;
      }
    }
  }
  return out;
}

Searched<std::optional<ParityStarCutset>> find_strong_parity_star_cutset(const Graph& g, const Hole& pentagon,
                                                                         Budget& budget) {
  PentagonOutcome local = decompose_at_pentagon(g, pentagon, budget);
  if (auto* star = std::get_if<ParityStarCutset>(&local.result)) return {*star, true};
  return search_star_cutsets(g, budget, true);
}

AttachmentReport analyze_attachment(const Graph& g, const VertexSet& h) {
  if (!h.is_subset_of(g.vertices())) throw ContractError("analyze_attachment: H is not a vertex subset");
  if (h.size() < 3 || h == g.vertices()) throw ContractError("analyze_attachment: need 3 <= |H| < |V(G)|");
  if (components(g, h).size() != 1) throw ContractError("analyze_attachment: G[H] must be connected");
  if (find_clique_cutset(g)) throw ContractError("analyze_attachment: G admits a clique cutset");

  const VertexSet outside = g.vertices() - h;
  AttachmentReport report;
  for (int wanted : {3, 2}) {
    for (Vertex v : outside) {
      VertexSet nbrs = g.neighbors(v) & h;
      if (wanted == 3 ? nbrs.size() < 3 : nbrs.size() != 2) continue;
      report.which = wanted == 3 ? AttachmentCase::many_neighbors : AttachmentCase::two_neighbors;
      report.vertex = v;
      report.neighbors = nbrs;
      if (wanted == 2) {
        report.s = nbrs.first();
        report.t = (nbrs - VertexSet{report.s}).first();
      }
      return report;
    }
  }

  // Every outside vertex has at most one neighbour in H: take a shortest path
  // through one component between nonadjacent attachments.
  for (const VertexSet& comp : components(g, outside)) {
    const VertexSet attach = g.neighborhood(comp) & h;
    std::optional<InducedPath> best;
    for (Vertex s : attach)
      for (Vertex t : attach) {
        if (t <= s || g.adjacent(s, t)) continue;
        VertexSet within = comp;
        within.insert(s);
        within.insert(t);
        auto dist = distances_from(g, t, within);
        if (dist[s] < 0) continue;
        if (best && dist[s] >= best->length()) continue;
        InducedPath path{{s}};
        for (Vertex cur = s; cur != t;) {
          for (Vertex w : g.neighbors(cur) & within)
            if (dist[w] == dist[cur] - 1) {
              cur = w;
              break;
            }
          path.vertices.push_back(cur);
        }
        best = std::move(path);
      }
    if (best) {
      report.which = AttachmentCase::connecting_path;
      report.s = best->front();
      report.t = best->back();
      report.path = std::move(*best);
      return report;
    }
  }
  throw ContractError("analyze_attachment: no attachment found; hypotheses violated");
}

DecompositionOutcome find_cutset(const Graph& g, Budget& budget) {
  if (auto clique = find_clique_cutset(g)) return {*clique};
  if (auto p3 = find_p3_cutset(g)) return {*p3};
  bool complete = true;
  for (const Hole& c : five_holes(g)) {
    PentagonOutcome local = decompose_at_pentagon(g, c, budget);
    if (auto* star = std::get_if<ParityStarCutset>(&local.result)) return {*star};
    if (auto* p3 = std::get_if<P3Cutset>(&local.result)) return {*p3};
    if (!local.complete) complete = false;
    if (budget.exhausted()) break;
  }
  auto star = search_star_cutsets(g, budget, true);
  if (star.value) return {*star.value};
  return {NoneFound{!complete || !star.complete}};
}

DecompositionOutcome decompose(const Graph& g, Budget& budget) {
  auto bip = check_bipartite(g);
  if (bip.bipartite) return {BipartiteCertificate{std::move(bip.side)}};
  if (auto v = find_low_degree(g)) return {LowDegreeCertificate{*v}};
  if (g.order() == 10 && g.edge_count() == 15)
    if (auto emb = isomorphism(g, petersen())) return {PetersenCertificate{std::move(*emb)}};
  return find_cutset(g, budget);
}

DecompositionOutcome decompose(const Graph& g) {
  Budget budget;
  return decompose(g, budget);
}

namespace {

std::optional<std::string> sides_problem(const Graph& g, const VertexSet& removed, const std::vector<VertexSet>& sides) {
  auto actual = components(g, g.vertices() - removed);
  if (actual.size() < 2) return "removing the cutset leaves the graph connected";
  auto claimed = sides;
  std::sort(claimed.begin(), claimed.end());
  if (claimed != actual) return "recorded sides differ from the components";
  return std::nullopt;
}

struct CertificateChecker {
  const Graph& g;

  std::optional<std::string> operator()(const BipartiteCertificate& c) const {
    if (static_cast<int>(c.side.size()) != g.order()) return "bipartition has wrong size";
    for (const Edge& e : g.edges())
      if (c.side[e.u] == c.side[e.v]) return "bipartition has a monochromatic edge";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const PetersenCertificate& c) const {
    const Graph p = petersen();
    if (g.order() != 10 || static_cast<int>(c.embedding.size()) != 10) return "not a 10-vertex isomorphism";
    VertexSet image;
    for (Vertex v : c.embedding) {
      if (v < 0 || v >= 10) return "embedding out of range";
      image.insert(v);
    }
    if (image.size() != 10) return "embedding not injective";
    for (Vertex a = 0; a < 10; ++a)
      for (Vertex b = a + 1; b < 10; ++b)
        if (p.adjacent(a, b) != g.adjacent(c.embedding[a], c.embedding[b])) return "embedding breaks adjacency";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const LowDegreeCertificate& c) const {
    if (c.vertex < 0 || c.vertex >= g.order() || g.degree(c.vertex) > 2) return "vertex degree exceeds two";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const CliqueCutset& c) const {
    const auto members = c.clique.to_vector();
    if (members.empty() || members.size() > 2) return "clique cutset must have one or two vertices";
    if (members.size() == 2 && !g.adjacent(members[0], members[1])) return "clique cutset is not a clique";
    return sides_problem(g, c.clique, c.sides);
  }

  std::optional<std::string> operator()(const P3Cutset& c) const {
    if (!is_induced_path(g, c.path)) return "P3 cutset is not an induced path";
    return sides_problem(g, VertexSet::of(c.path), c.sides);
  }

  std::optional<std::string> operator()(const ParityStarCutset& c) const {
    if (c.center < 0 || c.center >= g.order() || c.leaves.contains(c.center)) return "invalid centre";
    if (!c.leaves.is_subset_of(g.neighbors(c.center))) return "centre not adjacent to every leaf";
    if (auto p = sides_problem(g, c.cutset(), c.components)) return p;
    if (std::find(c.components.begin(), c.components.end(), c.witness) == c.components.end())
      return "witness is not a component";
    const auto ls = c.leaves.to_vector();
    Budget budget;
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        auto path = find_induced_path(g, PathQuery{ls[i], ls[j], c.witness, Parity::even, 2}, budget);
        if (!path.value) return "leaves " + std::to_string(ls[i]) + "," + std::to_string(ls[j]) + " lack an even path";
        if (!is_induced_path(g, path.value->vertices) || path.value->length() % 2 != 0 ||
            !path.value->interior().is_subset_of(c.witness))
          return "even path witness malformed";
      }
    if (c.strong != g.neighbors(c.center).intersects(c.witness)) return "strong flag inconsistent";
    if (!c.strong) return "star cutset is not strong";
    return std::nullopt;
  }

  std::optional<std::string> operator()(const NoneFound&) const { return "no decomposition found"; }
};

}  // namespace

std::optional<std::string> certificate_problem(const Graph& g, const DecompositionOutcome& outcome) {
  return std::visit(CertificateChecker{g}, outcome.certificate);
}

}  // namespace penta
