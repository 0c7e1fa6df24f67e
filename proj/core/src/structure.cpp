#include "penta/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace penta {

VertexSet InducedPath::interior() const {
  VertexSet out;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) out.insert(vertices[i]);
  return out;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0 || seq[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return false;
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> seq) {
  const std::size_t k = seq.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (seq[i] < 0 || seq[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (seq[i] == seq[j]) return false;
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

bool parity_ok(Parity p, int length) {
  switch (p) {
    case Parity::even: return length % 2 == 0;
    case Parity::odd: return length % 2 == 1;
    case Parity::any: break;
  }
  return true;
}

// Depth-first enumeration of induced paths from a source to any member of a
// target set. Candidates are tried in ascending order, so hits arrive in
// lexicographic order of their vertex sequences.
class PathSearch {
 public:
  struct Spec {
    Vertex source;
    VertexSet targets;
    VertexSet interior;
    Parity parity = Parity::any;
    int min_length = 1;
    int max_length = kUnbounded;
  };

  PathSearch(const Graph& g, const Spec& spec, Budget& budget) : g_(g), spec_(spec), budget_(budget) {}

  // Calls visit(path) for every hit until it returns false.
  template <class Visit>
  void run(Visit&& visit) {
    path_.assign(1, spec_.source);
    stopped_ = false;
    extend(VertexSet{}, visit);
  }

  bool aborted() const { return budget_.exhausted(); }
  bool length_capped() const { return length_capped_; }

 private:
  // Fewest extra edges needed to reach a live target from `last`, or -1.
  int remaining_distance(Vertex last, const VertexSet& blocked, const VertexSet& live) const {
    if (g_.neighbors(last).intersects(live)) return 1;
    VertexSet avail = spec_.interior - blocked;
    avail.erase(last);
    VertexSet seen{last};
    VertexSet frontier{last};
    for (int d = 1; !frontier.empty(); ++d) {
      VertexSet next;
      for (Vertex v : frontier) next |= g_.neighbors(v);
      next &= avail;
      next -= seen;
      if (next.empty()) return -1;
      for (Vertex v : next)
        if (g_.neighbors(v).intersects(live)) return d + 1;
      seen |= next;
      frontier = next;
    }
    return -1;
  }

  // blocked = closed neighbourhood of every path vertex except the last one.
  template <class Visit>
  void extend(const VertexSet& blocked, Visit& visit) {
    const Vertex last = path_.back();
    const int length = static_cast<int>(path_.size()) - 1;
    VertexSet candidates = g_.neighbors(last) - blocked;
    VertexSet live = spec_.targets - blocked;
    VertexSet next_blocked = blocked | g_.closed_neighborhood(VertexSet{last});
    VertexSet next_live = spec_.targets - next_blocked;
    const bool can_extend = !next_live.empty();
    for (Vertex w : candidates) {
      if (stopped_) return;
      if (live.contains(w)) {
        int len = length + 1;
        if (len >= spec_.min_length && len <= spec_.max_length && parity_ok(spec_.parity, len)) {
          path_.push_back(w);
          if (!visit(static_cast<const std::vector<Vertex>&>(path_))) stopped_ = true;
          path_.pop_back();
        }
        continue;
      }
      if (!can_extend || !spec_.interior.contains(w)) continue;
      if (!budget_.charge()) {
        stopped_ = true;
        return;
      }
      int needed = remaining_distance(w, next_blocked, next_live);
      if (needed < 0) continue;
      if (spec_.max_length != kUnbounded && length + 1 + needed > spec_.max_length) {
        length_capped_ = true;
        continue;
      }
      path_.push_back(w);
      extend(next_blocked, visit);
      path_.pop_back();
    }
  }

  const Graph& g_;
  Spec spec_;
  Budget& budget_;
  std::vector<Vertex> path_;
  bool stopped_ = false;
  bool length_capped_ = false;
};

VertexSet above(Vertex s, int n) { return VertexSet::range(n) - VertexSet::range(s + 1); }

// Lexicographically least induced cycle with minimum vertex s, of length in
// [min_len, max_len] and given parity, in canonical direction (second < last).
std::optional<Hole> cycle_from(const Graph& g, Vertex s, int min_len, int max_len, Parity parity, Budget& budget) {
  const VertexSet higher = above(s, g.order());
  const VertexSet interior = higher - g.closed_neighborhood(VertexSet{s});
  const VertexSet first_steps = g.neighbors(s) & higher;
  auto shift = [](int len) { return len == kUnbounded ? kUnbounded : len - 2; };
  for (Vertex a : first_steps) {
    if (min_len <= 3 && max_len >= 3 && parity_ok(parity, 3)) {
      VertexSet closing = g.neighbors(a) & (first_steps - VertexSet::range(a + 1));
      if (!closing.empty()) return Hole{{s, a, closing.first()}};
    }
    PathSearch::Spec spec{a, first_steps - VertexSet::range(a + 1), interior, parity, std::max(min_len - 2, 2),
                          shift(max_len)};
    PathSearch search(g, spec, budget);
    std::optional<Hole> found;
    search.run([&](const std::vector<Vertex>& p) {
      Hole h;
      h.vertices.push_back(s);
      h.vertices.insert(h.vertices.end(), p.begin(), p.end());
      found = std::move(h);
      return false;
    });
    if (found) return found;
    if (search.aborted()) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Searched<std::vector<InducedPath>> enumerate_induced_paths(const Graph& g, const PathQuery& q, Budget& budget) {
  if (q.source == q.target) throw ContractError("enumerate_induced_paths: source equals target");
  if (q.interior.contains(q.source) || q.interior.contains(q.target))
    throw ContractError("enumerate_induced_paths: path ends must lie outside the interior set");
  Searched<std::vector<InducedPath>> out;
  if (q.limit == 0) return out;
  PathSearch::Spec spec{q.source, VertexSet{q.target}, q.interior, q.parity, q.min_length, q.max_length};
  PathSearch search(g, spec, budget);
  search.run([&](const std::vector<Vertex>& p) {
    out.value.push_back(InducedPath{p});
    return out.value.size() < q.limit;
  });
  out.complete = !search.aborted();
  return out;
}

Searched<std::vector<InducedPath>> enumerate_induced_paths(const Graph& g, const PathQuery& q) {
  Budget budget;
  return enumerate_induced_paths(g, q, budget);
}

Searched<std::optional<InducedPath>> find_induced_path(const Graph& g, PathQuery query, Budget& budget) {
  query.limit = 1;
  auto found = enumerate_induced_paths(g, query, budget);
  Searched<std::optional<InducedPath>> out;
  out.complete = found.complete || !found.value.empty();
  if (!found.value.empty()) out.value = std::move(found.value.front());
  return out;
}

std::optional<Hole> shortest_odd_cycle(const Graph& g) {
  const int n = g.order();
  int best = kUnbounded;
  for (Vertex root = 0; root < n; ++root) {
    auto dist = distances_from(g, root);
    for (const Edge& e : g.edges())
      if (dist[e.u] >= 0 && dist[e.u] == dist[e.v]) best = std::min(best, 2 * dist[e.u] + 1);
  }
  if (best == kUnbounded) return std::nullopt;
  // A shortest odd cycle is chordless, so searching induced cycles of that length loses nothing.
  Budget budget(std::numeric_limits<std::uint64_t>::max());
  for (Vertex s = 0; s < n; ++s)
    if (auto h = cycle_from(g, s, best, best, Parity::odd, budget)) return h;
  return std::nullopt;
}

Searched<std::optional<Hole>> find_long_odd_hole(const Graph& g, Budget& budget) {
  Searched<std::optional<Hole>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    out.value = cycle_from(g, s, 7, kUnbounded, Parity::odd, budget);
    if (out.value) return out;
    if (budget.exhausted()) {
      out.complete = false;
      return out;
    }
  }
  return out;
}

Searched<std::optional<Hole>> find_long_odd_hole(const Graph& g) {
  Budget budget;
  return find_long_odd_hole(g, budget);
}

std::vector<Hole> five_holes(const Graph& g) {
  std::vector<Hole> out;
  Budget budget(std::numeric_limits<std::uint64_t>::max());
  for (Vertex s = 0; s < g.order(); ++s) {
    const VertexSet higher = above(s, g.order());
    const VertexSet interior = higher - g.closed_neighborhood(VertexSet{s});
    const VertexSet first_steps = g.neighbors(s) & higher;
    for (Vertex a : first_steps) {
      PathSearch::Spec spec{a, first_steps - VertexSet::range(a + 1), interior, Parity::any, 3, 3};
      PathSearch search(g, spec, budget);
      search.run([&](const std::vector<Vertex>& p) {
        Hole h;
        h.vertices.push_back(s);
        h.vertices.insert(h.vertices.end(), p.begin(), p.end());
        out.push_back(std::move(h));
        return true;
      });
    }
  }
  return out;
}

namespace {

void require_nonadjacent(const Graph& h, Vertex s, Vertex t, const char* what) {
  if (s < 0 || t < 0 || s >= h.order() || t >= h.order()) throw ContractError(std::string(what) + ": vertex out of range");
  if (s == t || h.adjacent(s, t))
    throw ContractError(std::string(what) + ": vertices must be distinct and nonadjacent");
}

Answer exists(const Graph& h, Vertex s, Vertex t, Parity parity, int min_len, Budget& budget) {
  VertexSet interior = h.vertices();
  interior.erase(s);
  interior.erase(t);
  auto found = find_induced_path(h, PathQuery{s, t, interior, parity, min_len}, budget);
  if (found.value) return Answer::yes;
  return found.complete ? Answer::no : Answer::unknown;
}

}  // namespace

Answer is_linked(const Graph& h, Vertex s, Vertex t, Budget& budget) {
  require_nonadjacent(h, s, t, "is_linked");
  Answer odd = exists(h, s, t, Parity::odd, 3, budget);
  if (odd == Answer::no) return Answer::no;
  Answer even = exists(h, s, t, Parity::even, 4, budget);
  if (even == Answer::no) return Answer::no;
  return odd == Answer::yes && even == Answer::yes ? Answer::yes : Answer::unknown;
}

Answer is_linked(const Graph& h, Vertex s, Vertex t) {
  Budget budget;
  return is_linked(h, s, t, budget);
}

Answer is_odd_linked(const Graph& h, Vertex s, Vertex t, Budget& budget) {
  require_nonadjacent(h, s, t, "is_odd_linked");
  return exists(h, s, t, Parity::odd, 5, budget);
}

Answer is_odd_linked(const Graph& h, Vertex s, Vertex t) {
  Budget budget;
  return is_odd_linked(h, s, t, budget);
}

namespace {

void require_pentagon(const Graph& g, const Hole& c) {
  if (c.length() != 5 || !is_induced_cycle(g, c.vertices)) throw ContractError("expected a hole of length five");
}

int position(const Hole& c, Vertex v) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
  return it == c.vertices.end() ? -1 : static_cast<int>(it - c.vertices.begin());
}

}  // namespace

VertexSet far_side(const Hole& pentagon, Vertex across) {
  int i = position(pentagon, across);
  if (i < 0) throw ContractError("far_side: vertex not on the hole");
  VertexSet out;
  out.insert(pentagon.vertices[(i + 2) % 5]);
  out.insert(pentagon.vertices[(i + 3) % 5]);
  return out;
}

VertexSet local_jump_interior(const Graph& g, const Hole& pentagon, Vertex across) {
  return g.vertices() - pentagon.vertex_set() - g.neighborhood(far_side(pentagon, across));
}

JumpKind classify_jump(const Graph& g, const Hole& pentagon, const InducedPath& path, Vertex across) {
  bool local = !g.neighborhood(far_side(pentagon, across)).intersects(path.interior());
  if (!local) return JumpKind::general;
  return path.length() == 3 ? JumpKind::short_jump : JumpKind::local;
}

Searched<std::vector<Jump>> find_jumps(const Graph& g, const Hole& pentagon, bool local_only, Budget& budget,
                                       int max_interior) {
  require_pentagon(g, pentagon);
  Searched<std::vector<Jump>> out;
  const VertexSet outside = g.vertices() - pentagon.vertex_set();
  const int max_length = max_interior == kUnbounded ? kUnbounded : max_interior + 1;
  // Pairs (c[i-1], c[i+1]) across c[i]; ordered by across vertex position.
  for (int i = 0; i < 5; ++i) {
    Vertex across = pentagon.vertices[i];
    Vertex s = pentagon.vertices[(i + 4) % 5];
    Vertex t = pentagon.vertices[(i + 1) % 5];
    if (s > t) std::swap(s, t);
    VertexSet interior = local_only ? local_jump_interior(g, pentagon, across) : outside;
    PathSearch::Spec spec{s, VertexSet{t}, interior, Parity::any, 2, max_length};
    PathSearch search(g, spec, budget);
    search.run([&](const std::vector<Vertex>& p) {
      InducedPath path{p};
      JumpKind kind = classify_jump(g, pentagon, path, across);
      out.value.push_back(Jump{std::move(path), across, kind});
      return true;
    });
    if (search.aborted() || search.length_capped()) out.complete = false;
    if (search.aborted()) break;
  }
  return out;
}

Searched<std::vector<Jump>> find_jumps(const Graph& g, const Hole& pentagon, bool local_only) {
  Budget budget;
  return find_jumps(g, pentagon, local_only, budget);
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& pattern, bool bijective)
      : host_(host), pattern_(pattern), bijective_(bijective) {
    order_pattern();
  }

  std::optional<Embedding> run() {
    map_.assign(static_cast<std::size_t>(pattern_.order()), -1);
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (place(0)) return map_;
    return std::nullopt;
  }

 private:
  // Each component is visited from its highest-degree vertex, breadth first,
  // so most placements are constrained by an already-mapped neighbour.
  void order_pattern() {
    const int n = pattern_.order();
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return pattern_.degree(a) > pattern_.degree(b); });
    VertexSet placed;
    for (Vertex root : by_degree) {
      if (placed.contains(root)) continue;
      for (const VertexSet& layer : bfs_layers(pattern_, root).layers) {
        auto layer_vs = layer.to_vector();
        std::stable_sort(layer_vs.begin(), layer_vs.end(),
                         [&](Vertex a, Vertex b) { return pattern_.degree(a) > pattern_.degree(b); });
        for (Vertex v : layer_vs) order_.push_back(v);
        placed |= layer;
      }
    }
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    VertexSet candidates = host_.vertices() - used_;
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex q = order_[j];
      if (pattern_.adjacent(p, q))
        candidates &= host_.neighbors(map_[q]);
      else
        candidates -= host_.neighbors(map_[q]);
    }
    for (Vertex h : candidates) {
      if (bijective_ ? host_.degree(h) != pattern_.degree(p) : host_.degree(h) < pattern_.degree(p)) continue;
      map_[p] = h;
      used_.insert(h);
      if (place(depth + 1)) return true;
      used_.erase(h);
      map_[p] = -1;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  bool bijective_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  VertexSet used_;
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Embedding> contains_induced(const Graph& g, const Graph& pattern) {
  return EmbeddingSearch(g, pattern, false).run();
}

std::optional<Embedding> isomorphism(const Graph& g, const Graph& pattern) {
  if (g.order() != pattern.order() || g.edge_count() != pattern.edge_count()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(pattern)) return std::nullopt;
  return EmbeddingSearch(g, pattern, true).run();
}

}  // namespace penta
