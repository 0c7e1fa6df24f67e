// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "cli.hpp"
#include "oracles.hpp"
#include "penta/coloring.hpp"
#include "penta/decomposition.hpp"
#include "penta/fixtures.hpp"
#include "penta/io.hpp"
#include "penta/recognition.hpp"
#include "support.hpp"

using namespace penta;
using support::L;

namespace {

struct CriterionResult {
  bool ok = true;
  std::string detail;
};

class Tally {
 public:
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  CriterionResult result() const {
    if (failures_ == 0) return {true, notes_};
    return {false, std::to_string(failures_) + " violation(s), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
  std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<Graph> exhaustive_to_nine() { return support::exhaustive_pentagraphs(9); }

std::vector<Graph> random_to_forty() { return support::random_pentagraphs(1000, 5, 40, 2024); }

std::vector<Graph> coloring_corpus() {
  auto all = exhaustive_to_nine();
  for (Graph& g : random_to_forty()) all.push_back(std::move(g));
  return all;
}

bool layers_bipartite(const Graph& g) {
  for (const VertexSet& comp : components(g)) {
    const Layering l = bfs_layers(g, comp.first());
    for (const VertexSet& layer : l.layers)
      if (!check_bipartite(induced_subgraph(g, layer).graph).bipartite) return false;
  }
  return true;
}

std::string g6(const Graph& g) { return write_graph6(g); }

// Star certificates collected while checking decompositions, reused by the Kempe criterion.
std::vector<std::pair<Graph, ParityStarCutset>> star_certificates;

CriterionResult recognition() {
  CorpusSpec spec;
  spec.n_max = 8;
  spec.labeled = true;
  spec.pentagraphs_only = false;
  Tally t;
  std::size_t count = 0;
  std::size_t positive = 0;
  generate_corpus(spec, [&](const Graph& g) {
    ++count;
    const bool expected = oracle::is_pentagraph(g);
    positive += expected;
    const RecognitionReport r = recognize(g);
    t.require(r.verdict == (expected ? penta::Verdict::pentagraph : penta::Verdict::not_pentagraph),
              "disagreement on " + g6(g));
    t.require(report_consistent(g, r), "inconsistent report on " + g6(g));
    return true;
  });
  t.require(count >= 1000, "corpus too small");
  t.note(std::to_string(count) + " labelled graphs, " + std::to_string(positive) + " pentagraphs");
  return t.result();
}

CriterionResult four_colourable() {
  Tally t;
  const auto corpus = coloring_corpus();
  for (const Graph& g : corpus) {
    const auto r = checks::four_coloring(g);
    t.require(r.status == checks::Status::pass, "four_color failed on " + g6(g) + ": " + r.detail);
    t.require(layers_bipartite(g), "non-bipartite layer in " + g6(g));
  }
  t.note(std::to_string(corpus.size()) + " graphs");
  return t.result();
}

CriterionResult three_colourable() {
  Tally t;
  const auto corpus = coloring_corpus();
  std::size_t confirmed = 0;
  for (const Graph& g : corpus) {
    try {
      const Coloring c = three_color(g);
      t.require(c.palette == 3 && verify_coloring(g, c), "improper colouring of " + g6(g));
    } catch (const std::exception& e) {
      t.require(false, g6(g) + ": " + e.what());
    }
    if (g.order() <= 14) {
      const auto chi = chromatic_number_bruteforce(g, 3);
      t.require(chi.has_value(), "brute force found no 3-colouring of " + g6(g));
      ++confirmed;
    }
  }
  t.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(confirmed) + " confirmed by brute force");
  return t.result();
}

CriterionResult decomposition() {
  Tally t;
  auto corpus = exhaustive_to_nine();
  for (Graph& g : support::random_pentagraphs(200, 5, 20, 77)) corpus.push_back(std::move(g));
  std::map<OutcomeKind, int> kinds;
  for (const Graph& g : corpus) {
    Budget budget;
    const DecompositionOutcome out = decompose(g, budget);
    ++kinds[out.kind()];
    t.require(out.kind() != OutcomeKind::none_found, "none_found on " + g6(g));
    const auto problem = certificate_problem(g, out);
    t.require(!problem, "certificate rejected on " + g6(g) + ": " + problem.value_or(""));
    if (const auto* s = std::get_if<ParityStarCutset>(&out.certificate)) star_certificates.emplace_back(g, *s);
  }
  std::string mix;
  for (auto [k, n] : kinds) mix += std::string(mix.empty() ? "" : " ") + to_string(k) + "=" + std::to_string(n);
  t.note(std::to_string(corpus.size()) + " graphs (" + mix + ")");
  return t.result();
}

CriterionResult petersen_facts() {
  Tally t;
  const Graph p = petersen();
  for (Vertex v = 0; v < 10; ++v) t.require(p.degree(v) == 3, "not 3-regular");
  t.require(girth(p) == 5, "girth");
  t.require(!check_bipartite(p).bipartite, "bipartite");
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) {
      t.require(distance(p, u, v) <= 2, "diameter");
      if (!p.adjacent(u, v)) t.require(is_linked(p, u, v) == Answer::yes, "unlinked pair");
    }
  t.require(decompose(p).kind() == OutcomeKind::petersen, "decompose");
  const Coloring c = three_color(p);
  t.require(verify_coloring(p, c) && c.used() == 3, "three_color");
  t.require(chromatic_number_bruteforce(p, 3) == 3, "chromatic number");
  return t.result();
}

std::vector<std::pair<Vertex, Vertex>> far_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (distance(g, u, v) >= 3) out.emplace_back(u, v);
  return out;
}

std::string labels(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::string s;
  for (auto [u, v] : pairs) s += "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
  return s;
}

CriterionResult family_facts() {
  Tally t;
  using Pairs = std::vector<std::pair<Vertex, Vertex>>;
  const Pairs p0 = far_pairs(petersen_minus_edge());
  t.require(p0 == Pairs{{L(9), L(10)}}, "P0 pairs at distance >= 3 are " + labels(p0) + ", expected (9,10) only");
  t.require(far_pairs(petersen_minus_vertex()) == Pairs{{L(7), L(8)}, {L(7), L(9)}, {L(8), L(9)}},
            "P1 distance pairs");
  const Graph p2 = petersen_minus_adjacent_pair();
  t.require(far_pairs(p2) == Pairs{{L(1), L(5)}, {L(3), L(7)}}, "P2 distance pairs");
  Pairs unlinked;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v)
      if (!p2.adjacent(u, v) && is_linked(p2, u, v) != Answer::yes) unlinked.emplace_back(u, v);
  t.require(unlinked == Pairs{{L(1), L(3)}, {L(1), L(7)}, {L(3), L(5)}, {L(5), L(7)}}, "P2 unlinked pairs");
  return t.result();
}

CriterionResult local_jumps() {
  Tally t;
  std::size_t graphs = 0;
  int pairs = 0;
  int indeterminate = 0;
  std::uint64_t seed = 31;
  while (graphs < 200 && seed < 400) {
    for (const Graph& g : support::random_pentagraphs(100, 8, 30, seed++)) {
      if (graphs == 200) break;
      Budget budget;
      const auto r = checks::local_jump_pairs(g, budget);
      if (r.status == checks::Status::skipped) continue;
      ++graphs;
      if (r.status == checks::Status::indeterminate) {
        ++indeterminate;
        continue;
      }
      t.require(r.status == checks::Status::pass, g6(g) + ": " + r.detail);
      pairs += r.evidence.value("pairs", 0);
    }
  }
  t.require(graphs == 200, "not enough graphs with a 5-hole");
  t.note(std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " jump pairs, " +
         std::to_string(indeterminate) + " out of budget");
  return t.result();
}

Coloring random_coloring(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  int palette = 3;
  for (Vertex v = 0; v < g.order(); ++v) palette = std::max(palette, g.degree(v) + 1);
  Coloring c{palette, std::vector<int>(g.order(), 0)};
  for (Vertex v : order) {
    std::vector<int> free;
    for (int k = 1; k <= palette; ++k) {
      bool used = false;
      for (Vertex u : g.neighbors(v)) used = used || c.colors[u] == k;
      if (!used) free.push_back(k);
    }
    c.colors[v] = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
  }
  return c;
}

CriterionResult kempe() {
  Tally t;
  std::mt19937_64 rng(8);
  const auto corpus = coloring_corpus();
  for (int i = 0; i < 1000; ++i) {
    const Graph& g = corpus[std::uniform_int_distribution<std::size_t>(0, corpus.size() - 1)(rng)];
    const Coloring c = random_coloring(g, rng);
    const Vertex v = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
    int other = std::uniform_int_distribution<int>(1, c.palette - 1)(rng);
    if (other >= c[v]) ++other;
    const Coloring s = kempe_swap(g, c, c[v], other, v);
    t.require(verify_coloring(g, s), "swap broke properness on " + g6(g));
    t.require(kempe_swap(g, s, c[v], other, v) == c, "swap is not an involution on " + g6(g));
  }

  // find_cutset and the exhaustive star search on the corpus, dense random
  // graphs and their 3-cores supply star certificates that the degree-two rule
  // hides from decompose.
  auto stars = star_certificates;
  CorpusSpec dense;
  dense.mode = CorpusMode::random;
  dense.n_min = 12;
  dense.n_max = 30;
  dense.seed = 9;
  dense.target_count = 200;
  dense.edge_probabilities = {1.0};
  auto sources = collect_corpus(dense);
  sources.insert(sources.end(), corpus.begin(), corpus.end());
  for (const Graph& d : sources)
    for (const Graph& g : {d, support::three_core(d)}) {
      if (g.order() == 0 || components(g).size() != 1) continue;
      Budget budget;
      const auto out = find_cutset(g, budget);
      if (const auto* s = std::get_if<ParityStarCutset>(&out.certificate)) stars.emplace_back(g, *s);
      if (g.order() > 30) continue;
      Budget search_budget;
      const auto searched = search_star_cutsets(g, search_budget);
      if (searched.value && searched.value->leaves.size() >= 2) stars.emplace_back(g, *searched.value);
    }

  std::size_t sides = 0;
  for (const auto& [g, cut] : stars)
    for (const VertexSet& a : cut.components) {
      const InducedSubgraph sub = induced_subgraph(g, a | cut.cutset());
      const Vertex v = sub.from_parent[cut.center];
      const VertexSet x = sub.restrict(cut.leaves);
      Coloring c = three_color(sub.graph);
      for (int round = 0; round < 5; ++round) {
        ++sides;
        try {
          const NormalizedColoring n = normalize_on_star(sub.graph, c, v, x);
          bool normal = n.coloring[v] == 1 && verify_coloring(sub.graph, n.coloring);
          for (Vertex y : x) normal = normal && n.coloring[y] == 2;
          t.require(normal, "normalisation result wrong on " + g6(g));
          t.require(n.passes <= static_cast<int>(x.size()), "too many passes on " + g6(g));
        } catch (const ColoringError& e) {
          t.require(false, g6(g) + ": " + e.what());
        }
        // Shuffle the side colouring by a random Kempe exchange for the next round.
        const Vertex w = std::uniform_int_distribution<Vertex>(0, sub.graph.order() - 1)(rng);
        const int other = 1 + (c[w] + std::uniform_int_distribution<int>(0, 1)(rng)) % 3;
        c = kempe_swap(sub.graph, c, c[w], other, w);
      }
    }
  t.require(!stars.empty(), "no star certificates to normalise");
  t.note("1000 swaps, " + std::to_string(stars.size()) + " star certificates (" +
         std::to_string(star_certificates.size()) + " from decompose), " + std::to_string(sides) +
         " normalisations");
  return t.result();
}

int cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o;
  std::ostringstream e;
  const int code = cli::run_cli(args, o, e);
  out = o.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

CriterionResult serialization() {
  Tally t;
  const auto corpus = coloring_corpus();
  for (const Graph& g : corpus) {
    const std::string text = g6(g);
    t.require(parse_graph6(text) == g && g6(parse_graph6(text)) == text, "round trip failed on " + text);
  }

  const auto dir = std::filesystem::temp_directory_path() / "penta_acceptance";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.g6").string();
  const std::string b = (dir / "b.g6").string();
  std::string sa;
  std::string sb;
  cli({"corpus", "--mode", "random", "--n-max", "30", "--seed", "99", "--count", "60", "--out", a, "--no-timing"}, sa);
  cli({"corpus", "--mode", "random", "--n-max", "30", "--seed", "99", "--count", "60", "--out", b, "--no-timing"}, sb);
  t.require(sa == sb, "corpus summaries differ");
  const std::string fa = slurp(a);
  const std::string fb = slurp(b);
  t.require(!fa.empty() && fa == fb, "corpus files differ");
  for (const char* cmd : {"recognize", "color3", "color4", "decompose", "oracle"}) {
    std::string one;
    std::string two;
    const int c1 = cli({cmd, a, "--no-timing", "--jobs", "1"}, one);
    const int c2 = cli({cmd, a, "--no-timing", "--jobs", "4"}, two);
    t.require(c1 == c2 && one == two && !one.empty(), std::string(cmd) + " report not reproducible");
  }
  for (const char* which : {"t12", "t13", "t25", "t31"}) {
    std::string one;
    std::string two;
    cli({"verify", a, "--which", which, "--no-timing", "--jobs", "1"}, one);
    cli({"verify", a, "--which", which, "--no-timing", "--jobs", "3"}, two);
    t.require(one == two, std::string("verify ") + which + " report not reproducible");
  }
  t.note(std::to_string(corpus.size()) + " graph6 round trips");
  return t.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria{
      {"1 recognition agrees with the induced-cycle oracle", recognition},
      {"2 four_color with bipartite BFS layers", four_colourable},
      {"3 three_color with brute-force confirmation", three_colourable},
      {"4 decompose certificates", decomposition},
      {"5 Petersen graph facts", petersen_facts},
      {"6 Petersen-family distance and linkage facts", family_facts},
      {"7 local jump pairs", local_jumps},
      {"8 Kempe swaps and star normalisation", kempe},
      {"9 serialization and reproducibility", serialization},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-50s %8.2fs  %s\n", v.ok ? "PASS" : "FAIL", name.c_str(), seconds_since(start),
                v.detail.c_str());
    std::fflush(stdout);
    failed += !v.ok;
  }
  return failed == 0 ? 0 : 1;
}
