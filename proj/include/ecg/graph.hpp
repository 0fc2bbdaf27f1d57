#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecg/bitset.hpp"

namespace ecg {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free
using CliqueList = std::vector<VertexSet>;

class Graph;

// Accumulates edges; produces an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  // Throws InputError on self-loops or out-of-range endpoints. Duplicate
  // edges are ignored.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& set_label(Vertex v, std::string label);
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
  std::size_t order() const { return rows_.size(); }

  Graph build() &&;
  Graph build() const&;

 private:
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
  bool has_labels_ = false;
};

// Simple undirected graph on dense vertex ids 0..n-1. Adjacency is kept both
// as bitset rows (O(1) edge tests, set algebra) and as sorted neighbor lists.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_rows(std::vector<Bitset> rows);

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return lists_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }

  // Lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const;

  Bitset empty_set() const { return Bitset(order()); }
  Bitset full_set() const {
    Bitset b(order());
    b.set_all();
    return b;
  }

  // Structural equality (labels ignored).
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  std::vector<Bitset> rows_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;

  void finish();
};

// Induced subgraph on `vertices` (sorted); vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, const Bitset& vertices);

Graph complement(const Graph& g);

// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_independent(const Graph& g, std::span<const Vertex> vertices);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const Bitset& within);
bool is_connected(const Graph& g);

// Exhaustive-permutation isomorphism test; practical for n <= 8.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace ecg
