#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "ecg/alpha_prime.hpp"
#include "ecg/errors.hpp"
#include "ecg/graph.hpp"
#include "ecg/oracles.hpp"
#include "ecg/parallel.hpp"

namespace ecg {

enum class CotreeLabel { leaf, join, union_ };

struct CotreeNode {
  CotreeLabel label = CotreeLabel::leaf;
  int left = -1;
  int right = -1;
  Vertex vertex = -1;  // leaves only
};

// Rooted binary cotree. Nodes are stored children-before-parent, so a single
// forward pass evaluates any bottom-up recurrence; the root is the last node.
class Cotree {
 public:
  Cotree() = default;
  Cotree(std::vector<CotreeNode> nodes, std::size_t vertex_count);

  const std::vector<CotreeNode>& nodes() const { return nodes_; }
  int root() const { return static_cast<int>(nodes_.size()) - 1; }
  std::size_t vertex_count() const { return vertex_count_; }
  const CotreeNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  // Vertices under node i, sorted.
  VertexSet leaves(int i) const;

  // The graph this cotree realizes (x ~ y iff their lowest common ancestor is
  // a join).
  Graph realize() const;

 private:
  std::vector<CotreeNode> nodes_;
  std::size_t vertex_count_ = 0;
};

struct NotCograph {
  std::vector<Vertex> p4;  // induced P_4 in path order
};

// Recursive decomposition: a disconnected graph becomes a union over its
// components, a graph with disconnected complement a join over co-components,
// both binarized left-deep. If neither applies the graph is not a cograph and
// an induced P_4 is returned. O(n^3 / 64).
std::variant<Cotree, NotCograph> cotree_decompose(const Graph& g);

class NotCographError : public InputError {
 public:
  explicit NotCographError(NotCograph w);
  const NotCograph& witness() const { return witness_; }

 private:
  NotCograph witness_;
};

// Throws NotCographError.
Cotree require_cotree(const Graph& g);

// Maximum-weight independent set value: leaf w(x), join max, union sum.
Weight cotree_mwis(const Cotree& t, std::span<const Weight> w);

// Optimal set for cotree_mwis. Zero-weight leaves are dropped; ties at a join
// take the lexicographically smaller child set.
WeightedSet cotree_mwis_set(const Cotree& t, std::span<const Weight> w);

// d'(x) = alpha(G[N(x)]) from the cotree of the neighborhood (falls back to
// mis_exact under `guard` if the neighborhood is not a cograph).
Weight d_prime(const Graph& g, Vertex x, std::size_t guard = kDefaultGuard);

// All d'(x) from the cotree of G: alpha of an induced subgraph is the
// cotree DP with indicator weights. Vertices are processed in parallel.
std::vector<Weight> d_prime_all(const Graph& g, const Cotree& t, Execution exec = Execution::parallel);

// alpha'(G) for a cograph via the d'-weighted independent set on the cotree.
// Throws NotCographError.
AlphaPrimeResult alpha_prime_cograph(const Graph& g, Execution exec = Execution::parallel);
AlphaPrimeResult alpha_prime_cograph(const Graph& g, const Cotree& t, Execution exec = Execution::parallel);

// alpha'(A, B): the largest independent edge set of G[A ∪ B] with no edge
// inside B, evaluated by the join/union recurrences over the cotree of G[A].
// Requires A nonempty, A ∩ B = ∅, G[A ∪ B] a cograph that is the join or the
// union of G[A] and G[B]; throws InputError otherwise.
std::size_t alpha_prime_pair(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

struct TriviallyPerfectReport {
  bool trivially_perfect = true;
  std::vector<Vertex> witness;  // induced C_4 or P_4
  bool witness_is_cycle = false;
};

TriviallyPerfectReport is_trivially_perfect(const Graph& g);

}  // namespace ecg
