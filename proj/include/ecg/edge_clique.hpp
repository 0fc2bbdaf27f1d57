#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ecg/errors.hpp"
#include "ecg/graph.hpp"
#include "ecg/parallel.hpp"

namespace ecg {

// K_e(G): one vertex per edge of the source graph, in lexicographic edge
// order. Two vertices are adjacent iff the endpoints of their source edges
// together induce a clique.
struct EdgeCliqueGraph {
  Graph graph;
  std::vector<Edge> edge_of_vertex;

  // K_e vertex of a source edge, or nullopt if {u, v} is not an edge.
  std::optional<Vertex> vertex_of(Edge e) const;
};

// Row kernel: the K_e neighbors of {a, b} are the other edges inside
// N(a) ∩ N(b) ∪ {a, b}. Rows are independent, so the parallel path splits
// them across threads.
EdgeCliqueGraph edge_clique_graph(const Graph& g, Execution exec = Execution::parallel);

// Reference construction: the 4-endpoint clique test on every edge pair.
EdgeCliqueGraph edge_clique_graph_reference(const Graph& g);

inline constexpr std::size_t kDefaultIterateGuard = 4096;

// r-fold K_e. Throws SizeGuardError if an intermediate graph has more than
// `guard` vertices.
Graph ke_iterate(const Graph& g, int rounds, std::size_t guard = kDefaultIterateGuard);

struct IndependentEdges {
  std::size_t value = 0;
  std::vector<Edge> edges;  // sorted
};

// alpha'(G) by exact MIS on K_e(G); `guard` bounds m(G).
IndependentEdges alpha_prime_bruteforce(const Graph& g, std::size_t guard = kDefaultGuard);

// True iff no two of the edges lie in a common clique of g.
bool edges_independent(const Graph& g, const std::vector<Edge>& edges);

}  // namespace ecg
