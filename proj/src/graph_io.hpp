#ifndef JOINTS_GRAPH_IO_HPP
#define JOINTS_GRAPH_IO_HPP

#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace joints {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6: header N(n) then the upper triangle column-major in 6-bit groups.
// Long (3-byte) header for 63 <= n <= 258047; shortest valid form always.
std::string write_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);

// Edge-list text: first non-comment line "n", then "u v" lines, '#' comments.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Sniffs graph6 vs edge list (graph6 bytes are all >= 63 and the edge-list
// header is plain digits below that range).
Graph parse_graph_auto(const std::string& text);

}  // namespace joints

#endif
