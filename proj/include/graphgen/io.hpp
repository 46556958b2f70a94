#pragma once

#include <string>

#include "graphgen/multigraph.hpp"
#include "graphgen/simple_graph.hpp"

namespace graphgen {

// Whitespace-separated "u v" per line, '#' starts a comment, blank lines are
// skipped. Vertices are implicit: every id in 0..max seen becomes a node.
// Parse problems raise std::runtime_error with "path:line:" context.
MultiGraph load_edge_list(const std::string& path);

// Writes one line per edge, self-loops as "u u". Dead vertices are compacted
// away, so ids in the file are dense even after contractions.
void write_edge_list(const std::string& path, const MultiGraph& g);
void write_edge_list(const std::string& path, const SimpleGraph& g);

}  // namespace graphgen
