#pragma once

#include <span>
#include <string_view>

#include "ecg/graph.hpp"

namespace ecg {

// Complement of a perfect matching on 2n vertices; matched pairs are
// (2i, 2i+1). Requires n >= 1.
Graph cocktail_party(int n);

// K_n^m: m parts of n vertices each. Vertex id = part * n + element.
Graph complete_multipartite(int part_size, int parts);

// Complete multipartite graph with parts of the given sizes, ids assigned
// part by part.
Graph complete_multipartite(std::span<const int> part_sizes);

Graph complete_graph(int n);
Graph path_graph(int n);
// Requires n >= 3.
Graph cycle_graph(int n);
// Rim vertices 0..n-1 in cyclic order, hub n. Requires n >= 3.
Graph wheel_graph(int n);
Graph empty_graph(int n);

// Parses "cp:4", "multipartite:2,3", "path:5", "cycle:5", "wheel:5",
// "complete:4", "empty:3", "star:3". Throws InputError.
Graph make_special(std::string_view descriptor);

enum class Composition { join, union_ };

// Disjoint union with the vertices of b shifted by a.order(); join adds every
// cross edge.
Graph compose(Composition op, const Graph& a, const Graph& b);
inline Graph join(const Graph& a, const Graph& b) { return compose(Composition::join, a, b); }
inline Graph disjoint_union(const Graph& a, const Graph& b) { return compose(Composition::union_, a, b); }

}  // namespace ecg
