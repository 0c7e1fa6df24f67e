#pragma once

#include <nlohmann/json.hpp>

#include "penta/coloring.hpp"
#include "penta/decomposition.hpp"
#include "penta/recognition.hpp"

namespace penta::report {

using nlohmann::json;

json to_json(const VertexSet& s);
json to_json(const RecognitionReport& r);
json to_json(const Coloring& c);
json to_json(const DecompositionOutcome& outcome);

VertexSet vertex_set_from_json(const json& j);
/// Inverse of to_json(DecompositionOutcome); throws json exceptions on malformed input.
DecompositionOutcome outcome_from_json(const json& j);

}  // namespace penta::report
