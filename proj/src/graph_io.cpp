#include "dompack/graph_io.hpp"

#include <cctype>

#include "dompack/errors.hpp"

namespace dompack {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw FormatError(std::string("graph6: byte outside [63,126]: '") + c + "'");
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw FormatError("graph6: truncated size header");
    n = (long{sextet(text[1])} << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  } else {
    throw FormatError("graph6: 8-byte size headers exceed the supported order");
  }
  if (n < 1 || n > Graph::kMaxVertices)
    throw FormatError("graph6: unsupported order " + std::to_string(n));

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected)
    throw FormatError("graph6: expected " + std::to_string(expected) + " data bytes for n=" +
                      std::to_string(n) + ", got " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int chunk = sextet(text[pos + k / 6]);
      if (chunk & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  // padding bits must be zero for emit(parse(s)) == s
  for (; k < expected * 6; ++k)
    if (sextet(text[pos + k / 6]) & (1 << (5 - k % 6))) throw FormatError("graph6: nonzero padding bits");
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw FormatError("edge JSON: expected object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw FormatError("edge JSON: \"n\" must be an integer");
  if (!j["edges"].is_array()) throw FormatError("edge JSON: \"edges\" must be an array");
  int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw FormatError("edge JSON: each edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return Graph(n, edges);
  } catch (const PreconditionError& err) {
    throw FormatError(std::string("edge JSON: ") + err.what());
  }
}

Graph parse_edge_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw FormatError(std::string("edge JSON: ") + err.what());
  }
  return graph_from_json(j);
}

std::string emit_edge_json(const Graph& g) { return to_json(g).dump(); }

std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view(line);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.back()))) view.remove_suffix(1);
    if (view.empty()) continue;
    out.push_back(view.front() == '{' ? parse_edge_json(view) : parse_graph6(view));
  }
  return out;
}

}  // namespace dompack
