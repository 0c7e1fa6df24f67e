#include "penta/recognition.hpp"

#include "penta/structure.hpp"

namespace penta {

RecognitionReport recognize(const Graph& g, Budget& budget) {
  RecognitionReport report;
  report.girth = girth(g);
  report.bipartite = check_bipartite(g).bipartite;
  if (report.girth && *report.girth < 5) {
    report.verdict = Verdict::not_pentagraph;
    report.witness = shortest_cycle(g);
    return report;
  }
  // Bipartite graphs have no odd cycles at all.
  if (report.bipartite) {
    report.verdict = Verdict::pentagraph;
    return report;
  }
  auto hole = find_long_odd_hole(g, budget);
  if (hole.value) {
    report.verdict = Verdict::not_pentagraph;
    report.witness = hole.value->vertices;
  } else {
    report.verdict = hole.complete ? Verdict::pentagraph : Verdict::indeterminate;
  }
  return report;
}

RecognitionReport recognize(const Graph& g) {
  Budget budget;
  return recognize(g, budget);
}

bool report_consistent(const Graph& g, const RecognitionReport& report) {
  if (girth(g) != report.girth) return false;
  if (check_bipartite(g).bipartite != report.bipartite) return false;
  switch (report.verdict) {
    case Verdict::pentagraph:
      return report.witness.empty() && (!report.girth || *report.girth >= 5);
    case Verdict::not_pentagraph: {
      if (!is_induced_cycle(g, report.witness)) return false;
      auto len = static_cast<int>(report.witness.size());
      return len <= 4 || (len >= 7 && len % 2 == 1);
    }
    case Verdict::indeterminate:
      return report.witness.empty();
  }
  return false;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pentagraph: return "pentagraph";
    case Verdict::not_pentagraph: return "not_pentagraph";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

}  // namespace penta
