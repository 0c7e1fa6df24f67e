#include "report.hpp"

namespace penta::report {

json to_json(const VertexSet& s) { return s.to_vector(); }

json to_json(const RecognitionReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["girth"] = r.girth ? json(*r.girth) : json(nullptr);
  j["bipartite"] = r.bipartite;
  j["witness"] = r.witness;
  return j;
}

json to_json(const Coloring& c) {
  return {{"palette", c.palette}, {"colors", c.colors}, {"used", c.used()}};
}

namespace {

json sides_json(const std::vector<VertexSet>& sides) {
  json out = json::array();
  for (const VertexSet& s : sides) out.push_back(to_json(s));
  return out;
}

std::vector<VertexSet> sides_from_json(const json& j) {
  std::vector<VertexSet> out;
  for (const json& s : j) out.push_back(vertex_set_from_json(s));
  return out;
}

struct CertificateWriter {
  json operator()(const BipartiteCertificate& c) const { return {{"side", c.side}}; }
  json operator()(const PetersenCertificate& c) const { return {{"embedding", c.embedding}}; }
  json operator()(const LowDegreeCertificate& c) const { return {{"vertex", c.vertex}}; }
  json operator()(const CliqueCutset& c) const { return {{"clique", to_json(c.clique)}, {"sides", sides_json(c.sides)}}; }
  json operator()(const P3Cutset& c) const { return {{"path", c.path}, {"sides", sides_json(c.sides)}}; }
  json operator()(const ParityStarCutset& c) const {
    return {{"center", c.center},          {"leaves", to_json(c.leaves)},
            {"witness", to_json(c.witness)}, {"strong", c.strong},
            {"components", sides_json(c.components)}};
  }
  json operator()(const NoneFound& c) const { return {{"budget_exhausted", c.budget_exhausted}}; }
};

}  // namespace

json to_json(const DecompositionOutcome& outcome) {
  return {{"kind", to_string(outcome.kind())}, {"certificate", std::visit(CertificateWriter{}, outcome.certificate)}};
}

VertexSet vertex_set_from_json(const json& j) {
  VertexSet s;
  for (const json& v : j) s.insert(v.get<Vertex>());
  return s;
}

DecompositionOutcome outcome_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const json& c = j.at("certificate");
  if (kind == "bipartite") return {BipartiteCertificate{c.at("side").get<std::vector<int>>()}};
  if (kind == "petersen") return {PetersenCertificate{c.at("embedding").get<Embedding>()}};
  if (kind == "low_degree") return {LowDegreeCertificate{c.at("vertex").get<Vertex>()}};
  if (kind == "clique_cut")
    return {CliqueCutset{vertex_set_from_json(c.at("clique")), sides_from_json(c.at("sides"))}};
  if (kind == "p3") return {P3Cutset{c.at("path").get<std::array<Vertex, 3>>(), sides_from_json(c.at("sides"))}};
  if (kind == "star") {
    ParityStarCutset s;
    s.center = c.at("center").get<Vertex>();
    s.leaves = vertex_set_from_json(c.at("leaves"));
    s.witness = vertex_set_from_json(c.at("witness"));
    s.strong = c.at("strong").get<bool>();
    s.components = sides_from_json(c.at("components"));
    return {s};
  }
  if (kind == "none_found") return {NoneFound{c.at("budget_exhausted").get<bool>()}};
  throw std::invalid_argument("unknown outcome kind '" + kind + "'");
}

}  // namespace penta::report
