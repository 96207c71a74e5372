#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "powercolor/graph.hpp"

namespace powercolor {

/// Parses one graph6 record. An optional ">>graph6<<" header and trailing
/// newline are accepted. Raises ParseError on malformed input.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6 (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// JSON edge list: {"n": int, "edges": [[u, v], ...], "labels": [str]?}.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Product spaces add the factor list and the vertex-id convention.
nlohmann::json product_to_json(const ProductSpace& ps);

enum class GraphFormat { automatic, graph6, json };

/// Parses graph text in the given format. `automatic` picks JSON when the
/// first non-blank character is '{' and graph6 otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

/// Reads a file if `source` names one, otherwise parses `source` itself.
Graph load_graph(const std::string& source,
                 GraphFormat format = GraphFormat::automatic);

}  // namespace powercolor
