#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "penta/coloring.hpp"
#include "penta/fixtures.hpp"
#include "support.hpp"

using namespace penta;

namespace {

Coloring col(int k, std::vector<int> c) { return Coloring{k, std::move(c)}; }

// Every proper k-colouring, by counting through all k^n assignments.
std::vector<Coloring> proper_colorings(const Graph& g, int k) {
  std::vector<Coloring> out;
  std::vector<int> c(g.order(), 1);
  for (;;) {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && c[e.u] != c[e.v];
    if (ok) out.push_back(col(k, c));
    int i = 0;
    while (i < g.order() && c[i] == k) c[i++] = 1;
    if (i == g.order()) break;
    ++c[i];
  }
  return out;
}

Graph star_gadget() {
  return Graph(12, {{0, 1}, {0, 8}, {0, 11}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 9}, {4, 11}, {5, 7}, {5, 10},
                    {6, 8}, {7, 11}, {8, 10}, {9, 10}});
}

// Side colourings to normalise: all of them for small sides, else a walk of
// random Kempe exchanges starting from three_color.
std::vector<Coloring> side_colorings(const Graph& g, std::mt19937_64& rng) {
  if (g.order() <= 12) return proper_colorings(g, 3);
  std::vector<Coloring> out{three_color(g)};
  for (int i = 0; i < 40; ++i) {
    const Coloring& c = out.back();
    const Vertex w = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
    const int other = 1 + (c[w] + std::uniform_int_distribution<int>(0, 1)(rng)) % 3;
    out.push_back(kempe_swap(g, c, c[w], other, w));
  }
  return out;
}

void check_normalization(const Graph& g, const ParityStarCutset& cut) {
  std::mt19937_64 rng(g.order());
  for (const VertexSet& a : cut.components) {
    const InducedSubgraph sub = induced_subgraph(g, a | cut.cutset());
    const Vertex v = sub.from_parent[cut.center];
    const VertexSet x = sub.restrict(cut.leaves);
    for (const Coloring& c : side_colorings(sub.graph, rng)) {
      const auto n = normalize_on_star(sub.graph, c, v, x);
      CHECK(verify_coloring(sub.graph, n.coloring));
      CHECK(n.coloring[v] == 1);
      for (Vertex y : x) CHECK(n.coloring[y] == 2);
      CHECK(n.passes <= static_cast<int>(x.size()));
    }
  }
}

}  // namespace

TEST_CASE("verify_coloring") {
  const Graph c5 = cycle_graph(5);
  CHECK(verify_coloring(c5, col(3, {1, 2, 1, 2, 3})));
  CHECK_FALSE(verify_coloring(c5, col(3, {1, 2, 1, 2, 2})));
  CHECK_THROWS_AS(verify_coloring(c5, col(3, {1, 2, 1, 2, 4})), ContractError);
  CHECK_THROWS_AS(verify_coloring(c5, col(3, {1, 2, 1, 2})), ContractError);

  // Outer cycle (1,2,1,2,3); the extension comes from brute force.
  const Graph p = petersen();
  bool extended = false;
  for (const Coloring& c : proper_colorings(p, 3))
    if (std::vector<int>(c.colors.begin(), c.colors.begin() + 5) == std::vector<int>{1, 2, 1, 2, 3}) {
      CHECK(verify_coloring(p, c));
      extended = true;
    }
  CHECK(extended);
}

TEST_CASE("four_color") {
  const Coloring c5 = four_color(cycle_graph(5));
  CHECK(verify_coloring(cycle_graph(5), c5));
  CHECK(c5.palette == 4);

  const Graph p = petersen();
  CHECK(verify_coloring(p, four_color(p)));
  const Layering layers = bfs_layers(p, 0);
  const Graph second = induced_subgraph(p, layers.layers[2]).graph;
  // 15 edges less the 3 + 6 reaching layers 1 and 2 leave a 6-cycle.
  CHECK(second.order() == 6);
  CHECK(second.edge_count() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(second.degree(v) == 2);
  CHECK(components(second).size() == 1);
  CHECK(check_bipartite(second).bipartite);

  const Graph tree(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
  const Coloring t = four_color(tree);
  CHECK(verify_coloring(tree, t));
  CHECK(t.used() == 2);

  const Graph bad(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(four_color(bad), LayerError);
  try {
    four_color(bad);
  } catch (const LayerError& e) {
    CHECK(e.layer() == 1);
    CHECK(e.witness().size() % 2 == 1);
  }
}

TEST_CASE("kempe_swap") {
  const Graph c5 = cycle_graph(5);
  const Coloring c = col(3, {1, 2, 1, 2, 3});
  CHECK(kempe_component(c5, c, 1, 3, 4).vertices == VertexSet{0, 4});
  const Coloring s = kempe_swap(c5, c, 1, 3, 4);
  CHECK(s.colors == std::vector<int>{3, 2, 1, 2, 1});
  CHECK(verify_coloring(c5, s));
  CHECK(kempe_swap(c5, s, 1, 3, 4) == c);

  const Coloring single = kempe_swap(c5, c, 2, 3, 1);
  CHECK(single.colors == std::vector<int>{1, 3, 1, 2, 3});

  CHECK_THROWS_AS(kempe_swap(c5, c, 1, 3, 1), ContractError);
}

TEST_CASE("kempe_swap preserves properness and is an involution") {
  std::mt19937_64 rng(3);
  for (const Graph& g : support::random_pentagraphs(60, 6, 24, 8)) {
    const Coloring base = three_color(g);
    for (int t = 0; t < 10; ++t) {
      const Vertex v = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
      const int other = 1 + (base[v] + std::uniform_int_distribution<int>(0, 1)(rng)) % 3;
      const Coloring s = kempe_swap(g, base, base[v], other, v);
      CHECK(verify_coloring(g, s));
      CHECK(kempe_swap(g, s, base[v], other, v) == base);
    }
  }
}

TEST_CASE("permute_palette") {
  const Coloring c = col(3, {1, 2, 3, 1});
  const std::vector<std::pair<Vertex, int>> fix{{2, 1}};
  const Coloring p = permute_palette(c, fix);
  CHECK(p[2] == 1);
  CHECK(p[0] == p[3]);
  CHECK(p[0] != p[1]);
}

TEST_CASE("combine_p3 on two pentagons sharing a path") {
  const Graph book = support::pentagon_book();
  const auto cut = find_p3_cutset(book);
  REQUIRE(cut.has_value());
  REQUIRE(cut->sides.size() == 2);
  std::vector<std::vector<Coloring>> options;
  for (const VertexSet& side : cut->sides) {
    const VertexSet path{cut->path[0], cut->path[1], cut->path[2]};
    options.push_back(proper_colorings(induced_subgraph(book, side | path).graph, 3));
  }
  int disagreeing = 0;
  for (const Coloring& a : options[0])
    for (const Coloring& b : options[1]) {
      const Coloring merged = combine_p3(book, *cut, {a, b});
      CHECK(merged.palette == 3);
      CHECK(verify_coloring(book, merged));
      // Path vertices carry the same label in both sides here.
      if (a[2] != b[2] || a[0] != b[0]) ++disagreeing;
    }
  CHECK(disagreeing > 0);

  P3Cutset lonely = *cut;
  lonely.sides.resize(1);
  CHECK_THROWS_AS(combine_p3(book, lonely, {options[0][0]}), ContractError);
}

TEST_CASE("normalize_on_star examples") {
  const Graph c5 = cycle_graph(5);
  const auto done = normalize_on_star(c5, col(3, {3, 1, 3, 2, 1}), 0, VertexSet{1});
  CHECK(done.passes == 0);
  CHECK(done.coloring.colors == std::vector<int>{1, 2, 1, 3, 2});
  CHECK(verify_coloring(c5, done.coloring));

  const auto one = normalize_on_star(c5, col(3, {1, 3, 1, 2, 3}), 0, VertexSet{1});
  CHECK(one.passes == 1);
  CHECK(one.coloring.colors == std::vector<int>{1, 2, 1, 2, 3});

  // Leaves of both colours on one {2,3}-path of odd length.
  CHECK_THROWS_AS(normalize_on_star(c5, col(3, {1, 2, 3, 2, 3}), 0, VertexSet{1, 4}), ColoringError);
  try {
    normalize_on_star(c5, col(3, {1, 2, 3, 2, 3}), 0, VertexSet{1, 4});
  } catch (const ColoringError& e) {
    CHECK(e.witness().size() == 4);
  }
}

TEST_CASE("normalize_on_star on every colouring of the star gadget") {
  const Graph g = star_gadget();
  const auto cut = verify_parity_star_cutset(g, 0, VertexSet{8, 11});
  REQUIRE(cut.value.has_value());
  check_normalization(g, *cut.value);
}

TEST_CASE("recombination on certificates from dense pentagraphs") {
  CorpusSpec spec;
  spec.mode = CorpusMode::random;
  spec.n_min = 12;
  spec.n_max = 30;
  spec.seed = 9;
  spec.target_count = 120;
  spec.edge_probabilities = {1.0};
  int p3 = 0;
  int stars = 0;
  for (const Graph& dense : collect_corpus(spec))
    for (const Graph& g : {dense, support::three_core(dense)}) {
      if (g.order() == 0 || components(g).size() != 1 || check_bipartite(g).bipartite) continue;
      Budget budget;
      const auto out = find_cutset(g, budget);
      if (const auto* cut = std::get_if<P3Cutset>(&out.certificate)) {
        ++p3;
        std::vector<Coloring> sides;
        for (const VertexSet& a : cut->sides)
          sides.push_back(three_color(induced_subgraph(g, a | VertexSet{cut->path[0], cut->path[1], cut->path[2]}).graph));
        CHECK(verify_coloring(g, combine_p3(g, *cut, sides)));
      } else if (const auto* star = std::get_if<ParityStarCutset>(&out.certificate)) {
        ++stars;
        check_normalization(g, *star);
      }
    }
  CHECK(p3 > 0);
  CHECK(stars > 0);
}

TEST_CASE("three_color on named graphs") {
  const Coloring p = three_color(petersen());
  CHECK(verify_coloring(petersen(), p));
  CHECK(p.used() == 3);
  const Coloring c5 = three_color(cycle_graph(5));
  CHECK(verify_coloring(cycle_graph(5), c5));
  CHECK(c5.used() == 3);
  CHECK(three_color(path_graph(4)).used() == 2);
  CHECK(three_color(Graph(1, {})).used() == 1);

  std::vector<int> base(petersen_base_coloring().begin(), petersen_base_coloring().end());
  CHECK(verify_coloring(petersen(), col(3, base)));
}

TEST_CASE("three_color rejects graphs outside the class") {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(three_color(k4), DecompositionFailure);
}

TEST_CASE("three_color matches the chromatic number on small pentagraphs") {
  auto corpus = support::exhaustive_pentagraphs(9);
  for (const Graph& g : support::random_pentagraphs(100, 10, 14, 17)) corpus.push_back(g);
  for (const Graph& g : corpus) {
    const Coloring c = three_color(g);
    CHECK(verify_coloring(g, c));
    CHECK(c.palette == 3);
    const auto chi = chromatic_number_bruteforce(g, 4);
    REQUIRE(chi.has_value());
    CHECK(*chi <= 3);
    CHECK(c.used() >= *chi);
    if (g.order() <= 9) CHECK(*chi == oracle::chromatic_number(g));
  }
}

TEST_CASE("chromatic_number_bruteforce") {
  CHECK(chromatic_number_bruteforce(cycle_graph(5), 5) == 3);
  CHECK(chromatic_number_bruteforce(petersen(), 5) == 3);
  CHECK(chromatic_number_bruteforce(Graph(2, {{0, 1}}), 5) == 2);
  CHECK(chromatic_number_bruteforce(Graph(3, {}), 5) == 1);
  CHECK_FALSE(chromatic_number_bruteforce(cycle_graph(5), 2).has_value());
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(chromatic_number_bruteforce(k4, 4) == 4);
  CHECK(oracle::chromatic_number(k4) == 4);
}
