#pragma once

#include <optional>
#include <vector>

#include "penta/graph.hpp"
#include "penta/search.hpp"

namespace penta {

enum class Verdict { pentagraph, not_pentagraph, indeterminate };

/// Membership certificate for the class of graphs with girth at least five whose
/// induced odd cycles all have length exactly five.
struct RecognitionReport {
  Verdict verdict = Verdict::indeterminate;
  std::optional<int> girth;      // nullopt for forests
  std::vector<Vertex> witness;   // a cycle of length <= 4, or an odd hole of length >= 7
  bool bipartite = false;
};

RecognitionReport recognize(const Graph& g, Budget& budget);
RecognitionReport recognize(const Graph& g);

/// Re-checks a report from scratch: the witness (if any) is an induced cycle of
/// the claimed kind and the recorded girth matches.
bool report_consistent(const Graph& g, const RecognitionReport& report);

const char* to_string(Verdict v);

}  // namespace penta
