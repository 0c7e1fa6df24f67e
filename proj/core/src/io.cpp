#include "penta/io.hpp"

#include <nlohmann/json.hpp>
#include <charconv>
#include <sstream>

namespace penta {

namespace {

constexpr int kBias = 63;

bool printable6(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  const std::size_t header_at = 0;
  if (line.empty()) throw ParseError("graph6: empty input", header_at);
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    if (!printable6(line[0])) throw ParseError("graph6: invalid header byte", 0);
    n = line[0] - kBias;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') throw ParseError("graph6: graphs beyond 258047 vertices unsupported", 1);
    if (line.size() < 4) throw ParseError("graph6: truncated size header", line.size());
    for (std::size_t i = 1; i < 4; ++i) {
      if (!printable6(line[i])) throw ParseError("graph6: invalid header byte", i);
      n = (n << 6) | (line[i] - kBias);
    }
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds capacity", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != pos + bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                         std::to_string(line.size() - pos),
                     std::min(line.size(), pos + bytes));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + k / 6;
      char c = line[at];
      if (!printable6(c)) throw ParseError("graph6: invalid data byte", at);
      if (((c - kBias) >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  for (std::size_t at = pos + k / 6; at < line.size(); ++at)
    if (!printable6(line[at])) throw ParseError("graph6: invalid data byte", at);
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_words(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

long to_number(const Token& t) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("dimacs: expected an integer, got '" + std::string(t.text) + "'", t.offset);
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  long n = -1;
  std::vector<Edge> edges;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    auto words = split_words(text.substr(line_start, line_end - line_start), line_start);
    line_start = line_end + 1;
    if (words.empty() || words[0].text == "c") continue;
    if (words[0].text == "p") {
      if (n >= 0) throw ParseError("dimacs: duplicate problem line", words[0].offset);
      if (words.size() != 4 || (words[1].text != "edge" && words[1].text != "col"))
        throw ParseError("dimacs: expected 'p edge <n> <m>'", words[0].offset);
      n = to_number(words[2]);
      to_number(words[3]);
      if (n < 0 || n > kMaxVertices) throw ParseError("dimacs: vertex count out of range", words[2].offset);
    } else if (words[0].text == "e") {
      if (n < 0) throw ParseError("dimacs: edge before problem line", words[0].offset);
      if (words.size() != 3) throw ParseError("dimacs: expected 'e <u> <v>'", words[0].offset);
      long u = to_number(words[1]);
      long v = to_number(words[2]);
      if (u < 1 || u > n) throw ParseError("dimacs: vertex " + std::to_string(u) + " out of range", words[1].offset);
      if (v < 1 || v > n) throw ParseError("dimacs: vertex " + std::to_string(v) + " out of range", words[2].offset);
      if (u == v) throw ParseError("dimacs: self-loop", words[1].offset);
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError("dimacs: unknown line type '" + std::string(words[0].text) + "'", words[0].offset);
    }
  }
  if (n < 0) throw ParseError("dimacs: missing problem line", 0);
  return Graph(static_cast<int>(n), edges);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

namespace {

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("json: expected an object with 'n' and 'edges'", 0);
  if (!j["n"].is_number_integer()) throw ParseError("json: 'n' must be an integer", 0);
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("json: each edge must be a pair of integers", 0);
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  return Graph(j["n"].get<int>(), edges);
}

}  // namespace

Graph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte);
  }
  return graph_from_json(j);
}

std::string write_json_graph(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return nlohmann::json{{"n", g.order()}, {"edges", edges}}.dump();
}

std::string write_dot(const Graph& g, std::span<const int> colors) {
  static constexpr const char* kPalette[] = {"white", "tomato", "gold", "skyblue", "palegreen", "orchid", "gray"};
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!colors.empty()) {
      int c = colors[static_cast<std::size_t>(v)];
      const char* fill = c >= 1 && c <= 5 ? kPalette[c] : kPalette[6];
      out << " [style=filled, fillcolor=" << fill << ", label=\"" << v << ":" << c << "\"]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Graph> read_graphs(std::string_view text, Format format) {
  std::vector<Graph> out;
  switch (format) {
    case Format::graph6: {
      std::size_t start = 0;
      while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
          try {
            out.push_back(parse_graph6(line));
          } catch (const ParseError& e) {
            throw ParseError(e.detail(), start + e.offset());
          }
        }
        start = end + 1;
      }
      break;
    }
    case Format::dimacs:
      out.push_back(parse_dimacs(text));
      break;
    case Format::json: {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what(), e.byte);
      }
      if (j.is_array())
        for (const auto& item : j) out.push_back(graph_from_json(item));
      else
        out.push_back(graph_from_json(j));
      break;
    }
  }
  return out;
}

Format parse_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return Format::graph6;
  if (name == "dimacs") return Format::dimacs;
  if (name == "json") return Format::json;
  throw GraphError("unknown format '" + std::string(name) + "'");
}

}  // namespace penta
