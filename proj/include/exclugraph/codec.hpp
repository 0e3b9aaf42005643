#pragma once

#include <string>
#include <string_view>

#include "exclugraph/graph.hpp"

namespace exclugraph {

enum class GraphFormat { graph6, edge_list };

// McKay graph6: size prefix followed by the upper triangle in column order,
// six bits per printable byte. Orders 63 and 64 use the 4-byte size prefix.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// "n; u-v u-v ..." with 0-based indices and whitespace-separated edges.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

std::string serialize(const Graph& g, GraphFormat format);
Graph parse(std::string_view text, GraphFormat format);

// Edge-list when the text contains ';', graph6 otherwise.
Graph parse_any(std::string_view text);

}  // namespace exclugraph
