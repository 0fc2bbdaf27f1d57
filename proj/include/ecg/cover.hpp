#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ecg/errors.hpp"
#include "ecg/graph.hpp"

namespace ecg {

enum class CoverKind { edge, vertex };

struct CliqueCover {
  CoverKind kind = CoverKind::edge;
  CliqueList cliques;
};

struct CoverViolation {
  std::string message;
  std::optional<std::size_t> clique_index;  // member that is not a clique
  std::optional<Edge> uncovered_edge;
  std::optional<Vertex> uncovered_vertex;
};

// Empty optional iff every member is a clique of g and every edge (edge
// kind) or vertex (vertex kind) lies in some member.
std::optional<CoverViolation> verify_cover(const Graph& g, const CliqueCover& cover);

// True iff no edge of the host lies in two members.
bool cliques_edge_disjoint(const CliqueList& cliques);

struct GyarfasBound {
  std::optional<std::size_t> value;  // ceil(log2(n + 1)) when applicable
  std::string reason;                // why the bound does not apply
  VertexSet isolated;
  std::vector<std::pair<Vertex, Vertex>> equivalent;
};

// Applies only to graphs with neither isolated nor equivalent vertices.
GyarfasBound gyarfas_bound(const Graph& g);

// ceil(m / C(omega, 2)); 0 for edgeless graphs.
std::size_t volume_bound(const Graph& g, std::size_t guard = kDefaultGuard);

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

struct ThetaResult {
  std::size_t value = 0;
  bool optimal = false;
  CliqueCover cover;
  std::optional<std::size_t> gyarfas;
  std::size_t volume = 0;
  std::size_t packing = 0;  // greedy independent-edge lower bound
  std::uint64_t nodes = 0;
};

// Minimum edge-clique cover over the maximal cliques by set-cover branch and
// bound: branch on the uncovered edge with fewest covering cliques, bound by
// a greedy packing of pairwise non-co-coverable uncovered edges. When the
// node budget runs out the best incumbent is returned with optimal = false.
// With gyarfas_pruning off, the search never stops early on the Gyarfas
// bound, so the result can be used to check that bound independently.
ThetaResult theta_e_exact(const Graph& g, std::uint64_t budget = kDefaultBudget,
                          std::size_t guard = kDefaultGuard, bool gyarfas_pruning = true);

struct KappaResult {
  std::size_t value = 0;
  CliqueCover cover;  // vertex kind; a partition of V into cliques
};

// kappa(G) = chi(complement of G).
KappaResult clique_cover_exact(const Graph& g, std::size_t guard = kDefaultGuard);

}  // namespace ecg
