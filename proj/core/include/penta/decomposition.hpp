#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "penta/graph.hpp"
#include "penta/search.hpp"
#include "penta/structure.hpp"

namespace penta {

/// Clique (a vertex or an edge, since pentagraphs are triangle-free) whose removal disconnects the graph.
struct CliqueCutset {
  VertexSet clique;
  std::vector<VertexSet> sides;  // components of G minus the clique
};

/// Induced path v1-v2-v3 whose removal disconnects the graph.
struct P3Cutset {
  std::array<Vertex, 3> path{};
  std::vector<VertexSet> sides;
};

/// Star cutset {center} + leaves with a component `witness` through which every
/// two leaves are joined by an induced path of even length.
struct ParityStarCutset {
  Vertex center = -1;
  VertexSet leaves;
  VertexSet witness;
  bool strong = false;  // center has a neighbour in the witness component
  std::vector<VertexSet> components;

  VertexSet cutset() const {
    VertexSet s = leaves;
    s.insert(center);
    return s;
  }
};

struct BipartiteCertificate {
  std::vector<int> side;
};
struct PetersenCertificate {
  Embedding embedding;  // Petersen fixture vertex -> graph vertex
};
struct LowDegreeCertificate {
  Vertex vertex = -1;
};
struct NoneFound {
  bool budget_exhausted = false;
};

enum class OutcomeKind { bipartite, petersen, low_degree, clique_cut, p3, star, none_found };

struct DecompositionOutcome {
  std::variant<BipartiteCertificate, PetersenCertificate, LowDegreeCertificate, CliqueCutset, P3Cutset,
               ParityStarCutset, NoneFound>
      certificate;

  OutcomeKind kind() const { return static_cast<OutcomeKind>(certificate.index()); }
};

const char* to_string(OutcomeKind kind);

/// Minimum-id vertex of degree at most two.
std::optional<Vertex> find_low_degree(const Graph& g);

/// A cut vertex, else a cut edge pair; vertex candidates are tried first, ascending.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g);

/// Lexicographically first (v1 < v3) induced three-vertex path whose removal disconnects g.
std::optional<P3Cutset> find_p3_cutset(const Graph& g);

/// Validates {center} + leaves as a parity star-cutset, preferring a witness
/// component that makes it strong. Requires center adjacent to every leaf.
Searched<std::optional<ParityStarCutset>> verify_parity_star_cutset(const Graph& g, Vertex center,
                                                                    const VertexSet& leaves, Budget& budget);
Searched<std::optional<ParityStarCutset>> verify_parity_star_cutset(const Graph& g, Vertex center,
                                                                    const VertexSet& leaves);

/// Drops leaves one at a time while the certificate stays valid, until no
/// single leaf can go.
ParityStarCutset minimize_star_cutset(const Graph& g, ParityStarCutset cut, Budget& budget);

/// Strong parity star-cutset derived from a cut vertex or cut edge.
std::optional<ParityStarCutset> star_from_clique_cutset(const Graph& g, const CliqueCutset& cut);

/// What the jump analysis around one 5-hole produced.
struct PentagonOutcome {
  std::variant<std::monostate, LowDegreeCertificate, P3Cutset, ParityStarCutset> result;
  /// Hole relabelled as c1..c5 when a labelling with the required jump pattern was found.
  std::optional<std::array<Vertex, 5>> labelling;
  bool complete = true;
};

/// Jump analysis around a 5-hole: finds a labelling c1..c5 with no short jumps
/// across c3, c4, c5, no local jump across c4, and every local jump across c3 or
/// c5 meeting a short jump; then separates the part D hanging off c4 by
/// c3-c4-c5 or by a star centred at c3 (or c5).
PentagonOutcome decompose_at_pentagon(const Graph& g, const Hole& pentagon, Budget& budget);

/// Jump construction first, then the brute-force star search as a fallback.
Searched<std::optional<ParityStarCutset>> find_strong_parity_star_cutset(const Graph& g, const Hole& pentagon,
                                                                         Budget& budget);

/// Brute force: centres ascending, leaf sets drawn from the centre's
/// neighbourhood in increasing size. Centres with more than max_pool
/// neighbours are skipped and make the result incomplete.
Searched<std::optional<ParityStarCutset>> search_star_cutsets(const Graph& g, Budget& budget, bool require_strong = true,
                                                              int max_pool = 12);

enum class AttachmentCase { many_neighbors, two_neighbors, connecting_path };

/// How the rest of a graph without clique cutsets attaches to an induced subgraph H.
struct AttachmentReport {
  AttachmentCase which = AttachmentCase::many_neighbors;
  Vertex vertex = -1;      // outside vertex for the first two cases
  VertexSet neighbors;     // its neighbours in H
  Vertex s = -1;
  Vertex t = -1;
  InducedPath path;        // third case: s-t path with interior outside H
};

/// Throws ContractError unless G[h] is connected, 3 <= |h| < |V(g)| and g has no clique cutset.
AttachmentReport analyze_attachment(const Graph& g, const VertexSet& h);

/// One of: bipartite, Petersen, a vertex of degree <= 2, a clique cutset, a
/// P3-cutset or a strong parity star-cutset, tried in that order.
DecompositionOutcome decompose(const Graph& g, Budget& budget);
DecompositionOutcome decompose(const Graph& g);

/// Cutset outcomes only (clique, P3, strong parity star).
DecompositionOutcome find_cutset(const Graph& g, Budget& budget);

/// Re-derives the certificate from scratch; nullopt when it holds, else a reason.
std::optional<std::string> certificate_problem(const Graph& g, const DecompositionOutcome& outcome);

}  // namespace penta
