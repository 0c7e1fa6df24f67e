#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "penta/graph.hpp"
#include "penta/search.hpp"

namespace penta {

enum class CorpusMode { exhaustive, random };

/// Largest n_max accepted in exhaustive mode.
inline constexpr int kExhaustiveMaxOrder = 10;

struct CorpusSpec {
  CorpusMode mode = CorpusMode::exhaustive;
  int n_min = 1;
  int n_max = 7;
  std::uint64_t seed = 1;
  /// Number of graphs in random mode.
  std::size_t target_count = 100;
  /// Random mode: graph i tries each vertex pair with probability edge_probabilities[i % size].
  std::vector<double> edge_probabilities{0.3, 0.6, 1.0};
  /// Exhaustive mode: emit every labelled graph instead of one per isomorphism class.
  bool labeled = false;
  /// Exhaustive mode: keep only pentagraphs (otherwise every graph of girth >= 5).
  bool pentagraphs_only = true;
  /// Step budget for each individual recognition or edge check.
  std::uint64_t max_steps = kDefaultMaxSteps;
  /// Stop after this many graphs; the stream is then flagged as truncated.
  std::size_t max_graphs = std::numeric_limits<std::size_t>::max();
};

class CorpusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CorpusStats {
  std::size_t emitted = 0;
  bool truncated = false;
};

/// Throws CorpusError for inconsistent specs.
void validate(const CorpusSpec& spec);

/// Streams graphs into `sink` (which may return false to stop early).
CorpusStats generate_corpus(const CorpusSpec& spec, const std::function<bool(const Graph&)>& sink);

std::vector<Graph> collect_corpus(const CorpusSpec& spec);

/// Adding edge uv keeps the graph a pentagraph: u, v at distance >= 4 and no
/// induced u-v path of even length >= 6. Answer::unknown when the budget runs out.
Answer edge_keeps_pentagraph(const Graph& g, Vertex u, Vertex v, Budget& budget);

}  // namespace penta
