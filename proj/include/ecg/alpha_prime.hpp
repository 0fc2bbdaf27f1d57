#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/oracles.hpp"

namespace ecg {

// Certificate for the vertex-weighted form of alpha':
//   alpha'(G) = max { sum_{x in A} d'(x) : A independent in G },
//   d'(x) = alpha(G[N(x)]).
// For each x in A the witness holds an independent set of N(x); the edges
// from x to it form the independent edge set that realizes the value.
struct AlphaPrimeResult {
  std::size_t value = 0;
  std::vector<Weight> d_prime;        // per vertex of G
  VertexSet chosen;                   // A, sorted
  std::vector<VertexSet> witnesses;   // parallel to `chosen`
  std::vector<Edge> witness_edges;    // sorted
};

// Empty optional when the certificate is internally consistent: A is
// independent, each witness is an independent subset of N(x) of size d'(x),
// the witness edges are independent in K_e(G) and number `value`. Otherwise
// a message naming the first violation.
std::optional<std::string> check_certificate(const Graph& g, const AlphaPrimeResult& r);

// Expands A and its witnesses into the sorted witness-edge list.
std::vector<Edge> witness_edges_of(const VertexSet& chosen, const std::vector<VertexSet>& witnesses);

}  // namespace ecg
