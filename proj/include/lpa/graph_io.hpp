#pragma once

#include <string>
#include <string_view>

#include "lpa/graph.hpp"

namespace lpa {

// Line-oriented graph text format:
//
//   # comment
//   vertices: u v w
//   edge e: u -> v
//
// `vertices:` may appear more than once; order of appearance is the vertex
// order. Blank lines and trailing `#` comments are ignored.

GraphSpec parse_graph_spec(std::string_view text);
Graph parse_graph(std::string_view text);
GraphPtr load_graph_file(const std::string& path);

/// Deterministic serializer; parse_graph(to_text(g)) == g.
std::string to_text(const Graph& g);

}  // namespace lpa
