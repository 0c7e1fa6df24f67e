#include "checks.hpp"

#include "penta/coloring.hpp"
#include "penta/decomposition.hpp"
#include "penta/fixtures.hpp"
#include "penta/structure.hpp"
#include "report.hpp"

namespace penta::checks {

using nlohmann::json;

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::indeterminate: return "indeterminate";
  }
  return "?";
}

CheckResult four_coloring(const Graph& g) {
  try {
    const Coloring c = four_color(g);
    if (!verify_coloring(g, c)) return {Status::fail, "improper four-colouring", report::to_json(c)};
    return {Status::pass, "", {}};
  } catch (const LayerError& e) {
    return {Status::fail, e.what(), {{"layer", e.layer()}, {"odd_cycle", e.witness()}}};
  }
}

CheckResult decomposition(const Graph& g, Budget& budget) {
  const DecompositionOutcome outcome = decompose(g, budget);
  if (const auto* none = std::get_if<NoneFound>(&outcome.certificate))
    return {none->budget_exhausted ? Status::indeterminate : Status::fail, "no decomposition found", {}};
  if (auto problem = certificate_problem(g, outcome))
    return {Status::fail, "certificate rejected: " + *problem, report::to_json(outcome)};
  return {Status::pass, to_string(outcome.kind()), {}};
}

namespace {

bool is_family_member(const Graph& g) {
  for (const Graph& f : {petersen(), petersen_minus_edge(), petersen_minus_vertex(), petersen_minus_adjacent_pair()})
    if (isomorphism(g, f)) return true;
  return false;
}

}  // namespace

CheckResult p2_cutsets(const Graph& g, Budget& budget) {
  const Graph pattern = petersen_minus_adjacent_pair();
  bool applies = false;
  for (const VertexSet& comp : components(g)) {
    const InducedSubgraph part = induced_subgraph(g, comp);
    if (!contains_induced(part.graph, pattern) || is_family_member(part.graph)) continue;
    applies = true;
    const DecompositionOutcome outcome = find_cutset(part.graph, budget);
    switch (outcome.kind()) {
      case OutcomeKind::p3:
      case OutcomeKind::star:
        if (auto problem = certificate_problem(part.graph, outcome))
          return {Status::fail, "certificate rejected: " + *problem, report::to_json(outcome)};
        break;
      case OutcomeKind::clique_cut:
        if (!star_from_clique_cutset(part.graph, std::get<CliqueCutset>(outcome.certificate)))
          return {Status::fail, "clique cutset without a strong star", report::to_json(outcome)};
        break;
      default: {
        const bool exhausted = std::get<NoneFound>(outcome.certificate).budget_exhausted;
        return {exhausted ? Status::indeterminate : Status::fail, "no P3-cutset or strong parity star-cutset",
                {{"component", report::to_json(comp)}}};
      }
    }
  }
  if (!applies) return {Status::skipped, "no induced copy outside the Petersen family", {}};
  return {Status::pass, "", {}};
}

CheckResult local_jump_pairs(const Graph& g, Budget& budget) {
  if (contains_induced(g, petersen_minus_adjacent_pair()))
    return {Status::skipped, "contains Petersen minus two adjacent vertices", {}};
  const auto holes = five_holes(g);
  if (holes.empty()) return {Status::skipped, "no 5-hole", {}};
  bool complete = true;
  int pairs = 0;
  for (const Hole& c : holes) {
    auto jumps = find_jumps(g, c, true, budget);
    if (!jumps.complete) complete = false;
    const auto& js = jumps.value;
    for (std::size_t i = 0; i < js.size(); ++i)
      for (std::size_t j = i + 1; j < js.size(); ++j) {
        const InducedPath& p1 = js[i].path;
        const InducedPath& p2 = js[j].path;
        const VertexSet ends1{p1.front(), p1.back()};
        const VertexSet ends2{p2.front(), p2.back()};
        const VertexSet shared = ends1 & ends2;
        if (shared.size() != 1) continue;
        ++pairs;
        const Vertex end = shared.first();
        const VertexSet around = g.neighbors(end) & c.vertex_set();
        const Vertex a = around.first();
        const Vertex b = (around - VertexSet{a}).first();
        auto found = find_induced_path(g, PathQuery{a, b, p1.interior() | p2.interior(), Parity::any, 3, 3}, budget);
        const json evidence{{"hole", c.vertices}, {"jumps", {p1.vertices, p2.vertices}}, {"common_end", end}};
        if (!found.complete) {
          complete = false;
          continue;
        }
        if (!found.value) return {Status::fail, "no short jump inside the two interiors", evidence};
        if (p1.length() == 3 || p2.length() == 3)
          return {Status::fail, "a local jump with a shared end is short", evidence};
      }
  }
  if (!complete) return {Status::indeterminate, "jump search incomplete", {{"pairs", pairs}}};
  return {Status::pass, "", {{"pairs", pairs}}};
}

}  // namespace penta::checks
