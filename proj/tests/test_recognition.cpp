#include <doctest.h>

#include "oracles.hpp"
#include "penta/fixtures.hpp"
#include "penta/recognition.hpp"
#include "penta/structure.hpp"
#include "support.hpp"

using namespace penta;

TEST_CASE("recognize on named graphs") {
  const auto c5 = recognize(cycle_graph(5));
  CHECK(c5.verdict == Verdict::pentagraph);
  CHECK(c5.girth == 5);
  CHECK_FALSE(c5.bipartite);

  const auto c7 = recognize(cycle_graph(7));
  CHECK(c7.verdict == Verdict::not_pentagraph);
  CHECK(c7.witness.size() == 7);
  CHECK(is_induced_cycle(cycle_graph(7), c7.witness));

  for (const char* name : {"petersen", "p0", "p1", "p2"}) {
    CAPTURE(name);
    const auto r = recognize(fixture(name));
    CHECK(r.verdict == Verdict::pentagraph);
    CHECK(r.girth == 5);
    CHECK(report_consistent(fixture(name), r));
  }

  const auto c4 = recognize(cycle_graph(4));
  CHECK(c4.verdict == Verdict::not_pentagraph);
  CHECK(c4.witness.size() == 4);

  const auto tree = recognize(path_graph(6));
  CHECK(tree.verdict == Verdict::pentagraph);
  CHECK_FALSE(tree.girth.has_value());
  CHECK(tree.bipartite);
  CHECK(recognize(Graph(1, {})).verdict == Verdict::pentagraph);
}

TEST_CASE("recognize reports a short cycle before an odd hole") {
  // A 7-hole with a chord making a 4-cycle.
  const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}});
  const auto r = recognize(g);
  CHECK(r.verdict == Verdict::not_pentagraph);
  CHECK(r.witness.size() <= 4);
  CHECK(report_consistent(g, r));
}

TEST_CASE("recognize with an exhausted budget is indeterminate") {
  Budget tiny(1);
  const auto r = recognize(petersen(), tiny);
  CHECK(r.verdict == Verdict::indeterminate);
}

TEST_CASE("recognize agrees with the induced-cycle oracle up to 9 vertices") {
  CorpusSpec spec;
  spec.n_max = 9;
  spec.pentagraphs_only = false;
  auto corpus = collect_corpus(spec);
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : oracle::isomorphism_classes(n)) corpus.push_back(g);

  int positives = 0;
  for (const Graph& g : corpus) {
    const auto r = recognize(g);
    const bool expected = oracle::is_pentagraph(g);
    CHECK(r.verdict == (expected ? Verdict::pentagraph : Verdict::not_pentagraph));
    CHECK(report_consistent(g, r));
    CHECK(r.bipartite == oracle::two_colorable(g));
    positives += expected;
  }
  CHECK(positives > 100);
}

TEST_CASE("induced subgraphs of pentagraphs are pentagraphs") {
  for (const Graph& g : support::random_pentagraphs(30, 10, 22, 11))
    for (const VertexSet& s : support::sample_subsets(g, 8, g.order())) {
      const Graph h = induced_subgraph(g, s).graph;
      CHECK(recognize(h).verdict == Verdict::pentagraph);
    }
}

TEST_CASE("report_consistent rejects forged reports") {
  auto r = recognize(cycle_graph(7));
  r.witness.pop_back();
  CHECK_FALSE(report_consistent(cycle_graph(7), r));

  auto p = recognize(petersen());
  p.girth = 6;
  CHECK_FALSE(report_consistent(petersen(), p));
}
