#pragma once

#include <iosfwd>
#include <string>

#include "efsub/graph.hpp"

namespace efsub {

// Text edge-list format: first line "n m", then m lines "u v" with 0-based
// indices. Blank lines and '#' comments are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6, bit-exact per the de-facto specification (McKay). Supports
// n <= 258047; an optional ">>graph6<<" header is accepted on input.
Graph from_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Loads a graph from a file, sniffing the format: a first significant line
// "n m" is read as an edge list, anything else as graph6.
Graph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Graph& g, const std::string& format);

}  // namespace efsub
