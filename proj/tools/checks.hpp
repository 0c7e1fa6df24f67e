#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "penta/graph.hpp"
#include "penta/search.hpp"

namespace penta::checks {

enum class Status { pass, fail, skipped, indeterminate };

const char* to_string(Status s);

/// Outcome of checking one structural property on one graph.
struct CheckResult {
  Status status = Status::pass;
  std::string detail;
  nlohmann::json evidence;  // counterexample data when status is fail
};

/// four_color succeeds, every BFS layer is bipartite and the colouring is proper.
CheckResult four_coloring(const Graph& g);

/// decompose returns something other than none_found, with a certificate that revalidates.
CheckResult decomposition(const Graph& g, Budget& budget);

/// Graphs holding an induced copy of Petersen minus two adjacent vertices, other than
/// the four Petersen-family fixtures, have a P3-cutset or a strong parity star-cutset.
CheckResult p2_cutsets(const Graph& g, Budget& budget);

/// On graphs without that induced subgraph: any two local jumps over a 5-hole sharing
/// exactly one end c leave a short jump across c inside their interiors, and neither is short.
/// Evidence holds the number of pairs examined.
CheckResult local_jump_pairs(const Graph& g, Budget& budget);

}  // namespace penta::checks
