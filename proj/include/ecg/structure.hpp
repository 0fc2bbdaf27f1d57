#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

struct EquivalenceReport {
  // Adjacent pairs {x, y}, x < y, with N[x] = N[y]; sorted.
  std::vector<std::pair<Vertex, Vertex>> equivalent_pairs;
  VertexSet isolated;
};

EquivalenceReport equivalent_pairs(const Graph& g);

struct OddWheel {
  Vertex hub = 0;
  std::vector<Vertex> rim;  // odd cycle in G[N(hub)], in cyclic order
};

// Returns nullopt when every neighborhood induces a bipartite graph,
// otherwise an odd wheel witness.
std::optional<OddWheel> find_odd_wheel(const Graph& g);
inline bool is_odd_wheel_free(const Graph& g) { return !find_odd_wheel(g).has_value(); }

// Some odd cycle (in cyclic order), or nullopt if the graph is bipartite.
std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g);

// Scans 4-subsets for an induced P_4; returns it in path order.
std::optional<std::vector<Vertex>> find_induced_p4(const Graph& g);
// Scans 4-subsets for an induced C_4; returns it in cyclic order.
std::optional<std::vector<Vertex>> find_induced_c4(const Graph& g);
// Scans k-subsets for an induced cycle of length k (k >= 4); cyclic order.
std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int k);

bool is_simplicial(const Graph& g, Vertex v);

}  // namespace ecg
