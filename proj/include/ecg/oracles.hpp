#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ecg/errors.hpp"
#include "ecg/graph.hpp"

namespace ecg {

using Weight = std::int64_t;

struct WeightedSet {
  Weight value = 0;
  VertexSet vertices;
};

// Exact brute-force oracles. Every entry point enforces `guard` on the vertex
// count and throws SizeGuardError above it.

// Inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting). Each clique
// is sorted; the list is sorted lexicographically. Isolated vertices appear as
// singleton cliques.
CliqueList maximal_cliques(const Graph& g, std::size_t guard = kDefaultGuard);
std::size_t clique_number(const Graph& g, std::size_t guard = kDefaultGuard);

// Maximum-weight independent set by branch and bound with neighborhood
// domination and a greedy clique-partition bound. Empty `weights` means unit
// weights; otherwise weights.size() must equal g.order() and be nonnegative.
WeightedSet mis_exact(const Graph& g, std::span<const Weight> weights = {},
                      std::size_t guard = kDefaultGuard);

// Minimum vertex cover as the complement of a maximum independent set.
WeightedSet vc_exact(const Graph& g, std::size_t guard = kDefaultGuard);

struct Coloring {
  std::size_t colors = 0;
  std::vector<VertexSet> classes;  // each sorted; ordered by smallest member
};

// Exact chromatic number by DSATUR branch and bound.
Coloring chromatic_exact(const Graph& g, std::size_t guard = kDefaultGuard);

}  // namespace ecg
