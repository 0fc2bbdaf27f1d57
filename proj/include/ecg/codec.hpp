#pragma once

#include <string>
#include <string_view>

#include "ecg/graph.hpp"

namespace ecg {

// graph6: N(n) header followed by the upper triangle in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per printable byte.
// Supports the one-byte (n < 63) and four-byte (n < 258048) headers. A
// trailing newline is accepted on input and never emitted.
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

// {"n": int, "edges": [[u, v], ...]} with edges emitted in sorted order.
std::string to_json_edge_list(const Graph& g);
Graph parse_json_edge_list(std::string_view text);

// Dispatches on the first non-blank character: '{' selects JSON, anything
// else graph6.
Graph parse_graph_auto(std::string_view text);

}  // namespace ecg
