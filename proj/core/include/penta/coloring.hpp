#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "penta/decomposition.hpp"
#include "penta/graph.hpp"
#include "penta/search.hpp"

namespace penta {

/// Total map vertex -> {1..palette}. Index v holds the colour of vertex v.
struct Coloring {
  int palette = 0;
  std::vector<int> colors;

  int operator[](Vertex v) const { return colors[v]; }
  /// Number of distinct colours actually used.
  int used() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// A recolouring or layering step met a configuration that a pentagraph
/// cannot have; `witness` is a vertex sequence showing why.
class ColoringError : public std::runtime_error {
 public:
  ColoringError(const std::string& what, std::vector<Vertex> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

/// A BFS layer that is not bipartite; the witness is an odd cycle inside it.
class LayerError : public ColoringError {
 public:
  LayerError(int layer, std::vector<Vertex> odd_cycle)
      : ColoringError("BFS layer " + std::to_string(layer) + " is not bipartite", std::move(odd_cycle)),
        layer_(layer) {}
  int layer() const { return layer_; }

 private:
  int layer_;
};

/// decompose gave nothing usable, or the recursion ran deeper than the graph is large.
class DecompositionFailure : public std::runtime_error {
 public:
  DecompositionFailure(const std::string& what, bool budget_exhausted)
      : std::runtime_error(what), budget_exhausted_(budget_exhausted) {}
  bool budget_exhausted() const { return budget_exhausted_; }

 private:
  bool budget_exhausted_;
};

/// True iff no edge is monochromatic. Throws ContractError when some vertex is
/// uncoloured or a colour lies outside 1..palette.
bool verify_coloring(const Graph& g, const Coloring& c);

/// Colours BFS layers of every component: even layers from {1,2}, odd layers from {3,4}.
Coloring four_color(const Graph& g);

struct KempeComponent {
  std::array<int, 2> colors{};
  VertexSet vertices;
};

/// Component containing v of the subgraph induced by colours a and b.
KempeComponent kempe_component(const Graph& g, const Coloring& c, int a, int b, Vertex v);

/// Exchanges a and b on the Kempe component containing v. Throws ContractError
/// unless c[v] is a or b.
Coloring kempe_swap(const Graph& g, const Coloring& c, int a, int b, Vertex v);

/// Renames colours so that every listed vertex gets the paired colour; the
/// remaining colours keep their relative order.
Coloring permute_palette(const Coloring& c, std::span<const std::pair<Vertex, int>> fixed);

/// Merges three-colourings of the sides G[A_i + path] of a P3-cutset, given in
/// the labels of induced_subgraph(g, cut.sides[i] + path).
Coloring combine_p3(const Graph& g, const P3Cutset& cut, const std::vector<Coloring>& side_colorings);

struct NormalizedColoring {
  Coloring coloring;
  int passes = 0;
};

/// Makes v colour 1 and every vertex of x colour 2 by {2,3}-Kempe exchanges.
/// Throws ColoringError (witness: an odd path between leaves) when a component
/// holds leaves of both colours.
NormalizedColoring normalize_on_star(const Graph& gi, const Coloring& c, Vertex v, const VertexSet& x);

/// Three-colouring built recursively along decompose. Inputs outside the class
/// may raise DecompositionFailure or ColoringError; the result is not re-checked.
Coloring three_color(const Graph& g, Budget& budget);
Coloring three_color(const Graph& g);

/// Least k <= k_max with a proper k-colouring, nullopt when none exists.
std::optional<int> chromatic_number_bruteforce(const Graph& g, int k_max);

/// Proper colouring of the Petersen fixture used as the base case.
const std::array<int, 10>& petersen_base_coloring();

}  // namespace penta
