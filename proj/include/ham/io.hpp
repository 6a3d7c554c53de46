#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ham/graph.hpp"

namespace ham {

enum class GraphFormat { graph6, dimacs_edge, edge_list };

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset)
    {
    }
    size_t offset;
};

Graph parse_graph(std::string_view bytes, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// Accepts "graph6", "dimacs", "dimacs-edge", "edge-list", "edgelist".
GraphFormat format_from_name(std::string_view name);
std::string_view format_name(GraphFormat f);

// Guesses the format from content: "p edge" header -> DIMACS, a leading
// decimal count -> edge list, otherwise graph6.
GraphFormat sniff_format(std::string_view bytes);

} // namespace ham
