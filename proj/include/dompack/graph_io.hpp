#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dompack/graph.hpp"

namespace dompack {

/// Decode one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; anything else malformed throws FormatError.
Graph parse_graph6(std::string_view text);
/// Canonical graph6 (no header, no newline).
std::string emit_graph6(const Graph& g);

/// {"n": int, "edges": [[u,v],...]}
Graph parse_edge_json(std::string_view text);
std::string emit_edge_json(const Graph& g);
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Reads one graph per non-empty line; each line is graph6 unless it starts
/// with '{', in which case it is an edge-list JSON object.
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace dompack
